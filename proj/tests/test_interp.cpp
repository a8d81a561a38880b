#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtt/interp.hpp"
#include "mtt/judgements.hpp"
#include "mtt/pca.hpp"
#include "mtt/syntax.hpp"

using namespace mtt;
using namespace mtt::interp;
using mtt::syntax::parse_term;

namespace {
Nat eval_closed(const char* term, std::uint64_t fuel = 100000) {
  pca::EvalResult r = pca::run(interpret(parse_term(term)), fuel);
  REQUIRE(r.converged);
  return r.value;
}
}  // namespace

TEST_CASE("interpretation of the base clauses") {
  pca::Program star = interpret(parse_term("star"));
  CHECK(star->kind == pca::ProgKind::Const);
  CHECK(star->value == Nat(0));
  CHECK(eval_closed("star") == Nat(0));
  CHECK(eval_closed("0") == Nat(0));
  CHECK(eval_closed("id(succ(0))") == Nat(0));
  CHECK(eval_closed("emp0(0)") == Nat(0));
  CHECK(eval_closed("r0(star)") == Nat(0));
  CHECK(eval_closed("epsilon") == Nat(0));
  CHECK(eval_closed("succ(succ(0))") == Nat(2));
  // ElN1 discards its first argument entirely
  CHECK(eval_closed("elN1(ap(0, 0), succ(0))") == Nat(1));
}

TEST_CASE("set codes evaluate to tagged pairs") {
  CHECK(eval_closed("Nhat") == pca::pair(Nat(1), Nat(2)));
  CHECK(eval_closed("N0hat") == pca::pair(Nat(1), Nat(0)));
  CHECK(eval_closed("N1hat") == pca::pair(Nat(1), Nat(1)));
  CHECK(eval_closed("bothat") == pca::pair(Nat(6), Nat(0)));
  CHECK(eval_closed("plushat(N1hat, Nhat)") ==
        pca::pair(Nat(4), pca::pair(pca::pair(Nat(1), Nat(1)), pca::pair(Nat(1), Nat(2)))));
  // Nhat as a program is literally {p}(1,2)
  CHECK(pca::to_string(interpret(parse_term("Nhat"))) == "{p}(1,2)");
}

TEST_CASE("the worked identity-code example reproduces the displayed program") {
  syntax::Term t = parse_term("Idhat(Id(N, x, x), y, z)");
  pca::Program p = interpret_in_context(t, {"x", "y", "z"});
  CHECK(pca::to_string(p, {"x", "y", "z"}) ==
        "Lx.Ly.Lz.{p}(12,{p}({p}(12,{p}({p}(1,2),{p}(x,x))),{p}(y,z)))");
  // and as a structural program
  using namespace pca;
  auto pr = [](Program a, Program b) {
    return make_apps(make_prim(PrimId::Pair), {a, b});
  };
  Program expected = pr(
      make_const(12),
      pr(pr(make_const(12), pr(pr(make_const(1), make_const(2)),
                               pr(make_var(2), make_var(2)))),
         pr(make_var(1), make_var(0))));
  expected = make_lam(make_lam(make_lam(expected)));
  CHECK(structurally_equal(p, expected));
}

TEST_CASE("interpretation in context is closed and applies correctly") {
  syntax::Term t = parse_term("succ(x)");
  pca::Program p = interpret_in_context(t, {"x"});
  CHECK(pca::is_closed(p));
  CHECK(pca::apply(pca::encode(p), Nat(6), 1000).value == Nat(7));
  // Lx.0
  pca::Program c = interpret_in_context(parse_term("star"), {"x"});
  CHECK(pca::apply(pca::encode(c), Nat(33), 1000).value == Nat(0));
  // identity
  pca::Program idp = interpret_in_context(parse_term("x"), {"x"});
  CHECK(pca::apply(pca::encode(idp), Nat(12), 1000).value == Nat(12));
  CHECK_THROWS_AS(interpret(parse_term("q")), std::invalid_argument);
}

TEST_CASE("the three lambda flavours collapse") {
  pca::Program a = interpret(parse_term("lam y. succ(y)"));
  pca::Program b = interpret(parse_term("lamImp y. succ(y)"));
  pca::Program c = interpret(parse_term("lamAll y. succ(y)"));
  CHECK(pca::structurally_equal(a, b));
  CHECK(pca::structurally_equal(a, c));
  pca::Program pa = interpret(parse_term("pair(0, 1)"));
  CHECK(pca::structurally_equal(pa, interpret(parse_term("pairAnd(0, 1)"))));
  CHECK(pca::structurally_equal(pa, interpret(parse_term("pairEx(0, 1)"))));
}

TEST_CASE("small-proposition tags sit above five") {
  using syntax::TypeKind;
  CHECK(set_code_tag(TypeKind::N0) == 1);
  CHECK(set_code_tag(TypeKind::Pi) == 2);
  CHECK(set_code_tag(TypeKind::Sigma) == 3);
  CHECK(set_code_tag(TypeKind::Plus) == 4);
  CHECK(set_code_tag(TypeKind::List) == 5);
  CHECK(set_code_tag(TypeKind::Bot) == 6);
  CHECK(set_code_tag(TypeKind::And) == 7);
  CHECK(set_code_tag(TypeKind::Or) == 8);
  CHECK(set_code_tag(TypeKind::Imp) == 9);
  CHECK(set_code_tag(TypeKind::Exists) == 10);
  CHECK(set_code_tag(TypeKind::Forall) == 11);
  CHECK(set_code_tag(TypeKind::Id) == 12);
  for (TypeKind k : {TypeKind::Bot, TypeKind::And, TypeKind::Or, TypeKind::Imp,
                     TypeKind::Exists, TypeKind::Forall, TypeKind::Id})
    CHECK(small_prop_tag(set_code_tag(k)));
  for (TypeKind k : {TypeKind::N0, TypeKind::Pi, TypeKind::Sigma, TypeKind::Plus,
                     TypeKind::List})
    CHECK_FALSE(small_prop_tag(set_code_tag(k)));
}

TEST_CASE("there are exactly seventeen conversion schemas") {
  CHECK(conversion_pairs().size() == 17);
}

TEST_CASE("hand-picked conversion instances evaluate equal") {
  auto run_pair = [](const ConversionInstance& inst) {
    ConversionPrograms progs = compile_conversion(inst, 100000);
    REQUIRE(progs.rhs_defined);
    pca::EvalResult l = pca::run(progs.lhs, 100000);
    pca::EvalResult r = pca::run(progs.rhs, 100000);
    REQUIRE(l.converged);
    REQUIRE(r.converged);
    CHECK(l.value == r.value);
    return l.value;
  };
  const auto& schemas = conversion_pairs();
  auto find = [&](const char* name) -> const ConversionSchema& {
    for (const auto& s : schemas)
      if (s.name == name) return s;
    FAIL("missing schema");
    return schemas[0];
  };
  // schema 4 with s = y, t = star: both sides 0
  CHECK(run_pair(find("beta-pi").instantiate(
            {syntax::t_var("y"), parse_term("star")})) == Nat(0));
  // schema 2: elN(0, succ(0), ...) = succ(0)
  CHECK(run_pair(find("elN-zero").instantiate(
            {parse_term("succ(0)"), parse_term("succ(z)")})) == Nat(1));
  // schema 9: pi1And(pairAnd(0,1)) = 0
  CHECK(run_pair(find("pi1-pairAnd").instantiate(
            {parse_term("0"), parse_term("1")})) == Nat(0));
  // schema 17: the cons case of elList
  CHECK(run_pair(find("elList-cons").instantiate(
            {parse_term("epsilon"), parse_term("3"), parse_term("0"),
             parse_term("succ(u)")})) == Nat(1));
}

TEST_CASE("substitution commutation on the spec examples") {
  Budget b{32, 64, 100000};
  CHECK(judgements::check_substitution(parse_term("x"), "x", parse_term("star"), b)
            .holds());
  CHECK(judgements::check_substitution(parse_term("succ(x)"), "x", parse_term("0"), b)
            .holds());
  syntax::Term t = parse_term("Idhat(Id(N, x, x), y, z)");
  // substituting through the worked example's endpoints, one variable left
  syntax::Term t2 = syntax::substitute(syntax::substitute(t, "y", parse_term("0")),
                                       "z", parse_term("succ(0)"));
  CHECK(judgements::check_substitution(t2, "x", parse_term("0"), b).holds());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtt/interp.hpp"
#include "mtt/pca.hpp"
#include "mtt/principles.hpp"
#include "mtt/realizability.hpp"

using namespace mtt;
using namespace mtt::principles;

namespace {
const Budget kB{32, 64, 20000};
const HaEnv kNoEnv;
}

TEST_CASE("the extensionality realizer is the three-argument constant zero") {
  Nat r = extfun_realizer();
  pca::Program p = pca::decode(r);
  CHECK(pca::to_string(p) == "Lv0.Lv1.Lv2.0");
  std::uint64_t vals[][3] = {{0, 0, 0}, {5, 9, 2}, {100, 3, 77}};
  for (auto& v : vals)
    CHECK(pca::apply_many(r, {Nat(v[0]), Nat(v[1]), Nat(v[2])}, 1000).value == Nat(0));
}

TEST_CASE("extfun validates on the finite instance matrix") {
  MatrixReport rep = validate_extfun(kB);
  CHECK(rep.rows.size() == 4);
  for (const auto& row : rep.rows) {
    INFO(row.name, " ", row.note);
    CHECK(row.verdict.holds());
  }
}

TEST_CASE("the choice realizer splits premise realizers pointwise") {
  Nat r = ac_realizer();
  // feed it a premise realizer choosing y = x with trivial proofs
  Nat prem = pca::encode(pca::make_lam(pca::make_apps(
      pca::make_prim(pca::PrimId::Pair), {pca::make_var(0), pca::make_const(0)})));
  pca::EvalResult res = pca::apply(r, prem, 20000);
  REQUIRE(res.converged);
  Nat f = pca::proj1(res.value);
  Nat w = pca::proj2(res.value);
  for (std::uint64_t x = 0; x <= 12; ++x) {
    CHECK(pca::apply(f, Nat(x), 20000).value == Nat(x));
    CHECK(pca::apply(w, Nat(x), 20000).converged);
  }
}

TEST_CASE("ac validates on its matrix") {
  MatrixReport rep = validate_ac(kB);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) {
    INFO(row.name);
    CHECK(row.verdict.holds());
  }
}

TEST_CASE("unique choice instances") {
  MatrixReport rep = validate_ac_unique(kB);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) {
    INFO(row.name);
    CHECK(row.verdict.holds());
  }
}

TEST_CASE("choice fails on a proof-irrelevant domain") {
  // A = Id(N,0,0) \/ Id(N,0,0) has every natural as a realizer and the
  // trivial equivalence; a choice of y with Id(N, y, x) cannot respect it.
  // The naive realizer applied to the premise r = Lx.<x,0> extracts the
  // identity, which is not extensional on A.
  realizability::SemEnv env;
  auto a = syntax::parse_type("Id(N, 0, 0) \\/ Id(N, 0, 0)");
  auto pi = syntax::ty_binder(syntax::TypeKind::Pi, "x", a,
                              syntax::ty_leaf(syntax::TypeKind::N));
  Nat prem = pca::encode(pca::make_lam(pca::make_apps(
      pca::make_prim(pca::PrimId::Pair), {pca::make_var(0), pca::make_const(0)})));
  // the premise realizer genuinely realizes (All x in A)(Ex y in N) Id(N,y,x)
  auto premise_prop = syntax::parse_type(
      "All (x in Id(N, 0, 0) \\/ Id(N, 0, 0)) Ex (y in N) Id(N, y, x)");
  CHECK_FALSE(realizability::realizes(prem, premise_prop, env, kB).fails());
  pca::EvalResult res = pca::apply(ac_realizer(), prem, 20000);
  REQUIRE(res.converged);
  Nat f = pca::proj1(res.value);
  CHECK(realizability::member(f, pi, env, kB).fails());
}

TEST_CASE("HA embedding follows the translation table") {
  CHECK(syntax::to_string(embed_ha(ha_eq(ha_zero(), ha_zero()))) == "Id(N, 0, 0)");
  HaFormula all_xx = ha_forall("x", ha_eq(ha_var("x"), ha_var("x")));
  CHECK(syntax::to_string(embed_ha(all_xx)) == "All (x in N) Id(N, x, x)");
  HaFormula imp = ha_imp(ha_eq(ha_succ(ha_zero()), ha_zero()), ha_false());
  CHECK(syntax::to_string(embed_ha(imp)) == "Id(N, 1, 0) -> Bot");
}

TEST_CASE("embedded terms evaluate to their arithmetic value") {
  CHECK(lemma_term_check(ha_succ(ha_succ(ha_zero())), kB).holds());
  CHECK(lemma_term_check(ha_add(ha_num(3), ha_num(4)), kB).holds());
  CHECK(lemma_term_check(ha_mul(ha_num(3), ha_num(5)), kB).holds());
  CHECK(lemma_term_check(ha_mul(ha_add(ha_num(2), ha_num(1)), ha_num(4)), kB).holds());
  std::uint64_t s = 9;
  for (int i = 0; i < 40; ++i) {
    HaFormula dummy;  // reuse the generator's term machinery via formulas
    (void)dummy;
    s += i;
    HaTerm t = ha_add(ha_mul(ha_num(s % 5), ha_num((s / 5) % 5)), ha_num(s % 7));
    CHECK(lemma_term_check(t, kB).holds());
  }
}

TEST_CASE("kleene realizability clauses") {
  for (std::uint64_t n = 0; n < 12; ++n) {
    CHECK(kleene_realizes(Nat(n), ha_eq(ha_zero(), ha_zero()), kNoEnv, kB).holds());
    CHECK(kleene_realizes(Nat(n), ha_false(), kNoEnv, kB).fails());
  }
  HaFormula disj = ha_or(ha_eq(ha_zero(), ha_zero()), ha_false());
  CHECK(kleene_realizes(pca::pair(Nat(0), Nat(3)), disj, kNoEnv, kB).holds());
  CHECK(kleene_realizes(pca::pair(Nat(1), Nat(3)), disj, kNoEnv, kB).fails());
  HaFormula ex = ha_exists("x", ha_eq(ha_var("x"), ha_succ(ha_zero())));
  CHECK(kleene_realizes(pca::pair(Nat(1), Nat(0)), ex, kNoEnv, kB).holds());
  CHECK(kleene_realizes(pca::pair(Nat(2), Nat(0)), ex, kNoEnv, kB).fails());
}

TEST_CASE("kleene realizability agrees with the model on the embedding") {
  LemmaRealizReport rep = lemma_realiz_suite(11, 60, 12, kB);
  CHECK(rep.formulas == 60);
  CHECK(rep.disagreements == 0);
  CHECK(rep.decided_pairs > 200);
}

TEST_CASE("church-thesis extraction for type-theoretic functions") {
  CHECK(ct_function_corpus().size() == 10);
  CtReport rep = validate_ct_lambda(kB, 12);
  REQUIRE(rep.rows.size() == 10);
  for (const auto& row : rep.rows) {
    INFO(row.name);
    CHECK(row.extracted_agrees);
    CHECK(row.witnesses_pass);
  }
}

TEST_CASE("glued church thesis on sampled relations") {
  MatrixReport rep = validate_ct(kB, 8);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) {
    INFO(row.name);
    CHECK(row.verdict.holds());
  }
}

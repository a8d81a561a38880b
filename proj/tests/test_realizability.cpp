#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtt/interp.hpp"
#include "mtt/pca.hpp"
#include "mtt/realizability.hpp"
#include "mtt/syntax.hpp"

using namespace mtt;
using namespace mtt::realizability;
using mtt::syntax::parse_type;

namespace {

const Budget kB{32, 64, 20000};
const SemEnv kEmpty;

Nat lam_const(const Nat& v) { return pca::encode(pca::make_lam(pca::make_const(v))); }

Nat id_code() { return pca::encode(pca::make_lam(pca::make_var(0))); }

Nat code_of(const char* set_expr) {
  auto r = pca::run(interp::interpret(syntax::hat(parse_type(set_expr))), 100000);
  REQUIRE(r.converged);
  return r.value;
}

std::uint64_t mix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// The sampled type corpus used by the relation-law properties.
const std::vector<const char*>& type_corpus() {
  static const std::vector<const char*> corpus = {
      "N0", "N1", "N", "N1 + N1", "N1 + N", "List(N1)", "List(N0)",
      "Sig (x in N1) N1", "Sig (x in N1 + N1) N1", "Pi (x in N1) N1",
      "Pi (x in N1) N", "Bot", "Id(N, 0, 0)", "Id(N, 0, succ(0))",
      "Id(N1, star, star)", "Id(N, 0, 0) /\\ Id(N1, star, star)",
      "Bot \\/ Id(N, 0, 0)", "Id(N, 0, 0) -> Id(N, 0, 0)",
      "Ex (x in N1) Id(N1, x, star)", "All (x in N1) Id(N1, x, x)",
      "tau(N1hat)", "tau(bothat)",
  };
  return corpus;
}

}  // namespace

TEST_CASE("realizability of the base propositions") {
  for (std::uint64_t n = 0; n < 20; ++n) {
    CHECK(realizes(Nat(n), parse_type("Id(N, 0, 0)"), kEmpty, kB).holds());
    CHECK(realizes(Nat(n), parse_type("Bot"), kEmpty, kB).fails());
  }
  CHECK(realizes(pca::pair(Nat(0), Nat(0)),
                 parse_type("Id(N, 0, 0) \\/ Bot"), kEmpty, kB)
            .holds());
  CHECK(realizes(pca::pair(Nat(1), Nat(0)),
                 parse_type("Id(N, 0, 0) \\/ Bot"), kEmpty, kB)
            .fails());
  // conjunction via projections
  CHECK(realizes(pca::pair(Nat(4), Nat(9)),
                 parse_type("Id(N, 0, 0) /\\ Id(N1, star, star)"), kEmpty, kB)
            .holds());
  // existential: witness plus proof
  CHECK(realizes(pca::pair(Nat(0), Nat(5)),
                 parse_type("Ex (x in N1) Id(N1, x, star)"), kEmpty, kB)
            .holds());
  CHECK(realizes(pca::pair(Nat(1), Nat(5)),
                 parse_type("Ex (x in N1) Id(N1, x, star)"), kEmpty, kB)
            .fails());
}

TEST_CASE("environments substitute numerals for variables") {
  SemEnv env;
  env.emplace("x", Nat(3));
  CHECK(realizes(Nat(0), parse_type("Id(N, x, succ(succ(succ(0))))"), env, kB).holds());
  env.insert_or_assign("x", Nat(4));
  CHECK(realizes(Nat(0), parse_type("Id(N, x, succ(succ(succ(0))))"), env, kB).fails());
}

TEST_CASE("membership in ground sets and dependent sets") {
  CHECK(member(Nat(0), parse_type("N1"), kEmpty, kB).holds());
  CHECK(member(Nat(1), parse_type("N1"), kEmpty, kB).fails());
  for (std::uint64_t n = 0; n < 20; ++n)
    CHECK(member(Nat(n), parse_type("N"), kEmpty, kB).holds());
  CHECK(member(id_code(), parse_type("Pi (x in N1) N1"), kEmpty, kB).holds());
  CHECK(member(pca::code_of_prim(pca::PrimId::Succ),
               parse_type("Pi (x in N1) N1"), kEmpty, kB)
            .fails());
  CHECK(member(pca::pair(Nat(0), Nat(0)), parse_type("Sig (x in N1) N1"), kEmpty, kB)
            .holds());
  CHECK(member(pca::pair(Nat(0), Nat(2)), parse_type("Sig (x in N1) N1"), kEmpty, kB)
            .fails());
  // lists are componentwise
  CHECK(member(pca::list_of({Nat(0), Nat(0)}), parse_type("List(N1)"), kEmpty, kB)
            .holds());
  CHECK(member(pca::list_of({Nat(0), Nat(1)}), parse_type("List(N1)"), kEmpty, kB)
            .fails());
}

TEST_CASE("equivalence clauses") {
  CHECK(equiv(Nat(5), Nat(9), parse_type("Id(N, 0, 0)"), kEmpty, kB).holds());
  CHECK(equiv(Nat(2), Nat(2), parse_type("N"), kEmpty, kB).holds());
  CHECK(equiv(Nat(2), Nat(3), parse_type("N"), kEmpty, kB).fails());
  // two programs computing the same function on J(N1)
  Nat c0a = lam_const(Nat(0));
  Nat c0b = pca::encode(pca::make_lam(pca::make_app(
      pca::make_prim(pca::PrimId::P1),
      pca::make_apps(pca::make_prim(pca::PrimId::Pair),
                     {pca::make_const(0), pca::make_var(0)}))));
  CHECK(equiv(c0a, c0b, parse_type("Pi (x in N1) N1"), kEmpty, kB).holds());
  CHECK(equiv(id_code(), c0a, parse_type("Pi (x in N1) N1"), kEmpty, kB).holds());
}

TEST_CASE("carrier classification") {
  Carrier n1 = classify_carrier(parse_type("N1"), kEmpty, kB);
  CHECK(n1.kind == Carrier::Finite);
  REQUIRE(n1.elems.size() == 1);
  CHECK(n1.elems[0] == Nat(0));
  CHECK(n1.numeric);

  Carrier sum = classify_carrier(parse_type("N1 + N1"), kEmpty, kB);
  CHECK(sum.kind == Carrier::Finite);
  REQUIRE(sum.elems.size() == 2);
  CHECK(sum.elems[0] == pca::pair(Nat(0), Nat(0)));
  CHECK(sum.elems[1] == pca::pair(Nat(1), Nat(0)));

  CHECK(classify_carrier(parse_type("N"), kEmpty, kB).kind ==
        Carrier::NumericUnbounded);
  CHECK(classify_carrier(parse_type("N0"), kEmpty, kB).kind == Carrier::Empty);
  CHECK(classify_carrier(parse_type("List(N1)"), kEmpty, kB).kind == Carrier::Opaque);
  CHECK(classify_carrier(parse_type("Id(N, 0, 0)"), kEmpty, kB).kind ==
        Carrier::NumericUnbounded);
  CHECK(classify_carrier(parse_type("Id(N, 0, succ(0))"), kEmpty, kB).kind ==
        Carrier::Empty);
}

TEST_CASE("propositional functions into props") {
  // the constant falsum family is extensional
  CHECK(member(lam_const(code_of("Bot")), parse_type("N1 -> props"), kEmpty, kB)
            .holds());
  // the identity maps 0 to 0, which is no small-proposition code
  CHECK(member(id_code(), parse_type("N1 -> props"), kEmpty, kB).fails());
  // over N the check is sampled: never Fails for a genuine family
  Verdict v = member(lam_const(code_of("Id(N, 0, 0)")), parse_type("N -> props"),
                     kEmpty, kB);
  CHECK_FALSE(v.fails());
}

TEST_CASE("the code collections Set and props") {
  CHECK(member(code_of("N"), parse_type("Set"), kEmpty, kB).holds());
  CHECK(member(code_of("N1 + N1"), parse_type("Set"), kEmpty, kB).holds());
  CHECK(member(Nat(0), parse_type("Set"), kEmpty, kB).fails());
  CHECK(member(code_of("Bot"), parse_type("props"), kEmpty, kB).holds());
  CHECK(member(code_of("Id(N1, star, star)"), parse_type("props"), kEmpty, kB).holds());
  // a set code that is no small proposition
  CHECK(member(code_of("N"), parse_type("props"), kEmpty, kB).fails());
  // equal codes are equal in Set; distinct carriers are not
  CHECK(equiv(code_of("N"), code_of("N"), parse_type("Set"), kEmpty, kB).holds());
  CHECK(equiv(code_of("N1"), code_of("N0"), parse_type("Set"), kEmpty, kB).fails());
  CHECK(equiv(code_of("Bot"), code_of("Id(N,0,succ(0))"), parse_type("props"),
              kEmpty, kB)
            .holds());  // both empty realizer sets
  CHECK(equiv(code_of("Bot"), code_of("Id(N,0,0)"), parse_type("props"), kEmpty, kB)
            .fails());
}

TEST_CASE("reflexivity on members across the corpus") {
  std::uint64_t s = 3;
  int decided = 0;
  for (const char* ty : type_corpus()) {
    syntax::TypeExpr a = parse_type(ty);
    for (int i = 0; i < 20; ++i) {
      Nat n(mix(s) % 24);
      Verdict m = member(n, a, kEmpty, kB);
      if (!m.decided()) continue;
      ++decided;
      if (m.holds()) CHECK(equiv(n, n, a, kEmpty, kB).holds());
    }
  }
  CHECK(decided >= 300);
}

TEST_CASE("symmetry and transitivity on decided samples") {
  std::uint64_t s = 1203;
  int sym_checked = 0, tra_checked = 0;
  for (const char* ty : type_corpus()) {
    syntax::TypeExpr a = parse_type(ty);
    for (int i = 0; i < 22; ++i) {
      Nat n(mix(s) % 16), m(mix(s) % 16), l(mix(s) % 16);
      Verdict nm = equiv(n, m, a, kEmpty, kB);
      if (nm.decided()) {
        ++sym_checked;
        Verdict mn = equiv(m, n, a, kEmpty, kB);
        CHECK(mn.decided());
        CHECK(nm.truth == mn.truth);
      }
      Verdict ml = equiv(m, l, a, kEmpty, kB);
      if (nm.holds() && ml.holds()) {
        ++tra_checked;
        CHECK(equiv(n, l, a, kEmpty, kB).holds());
      }
    }
  }
  CHECK(sym_checked >= 300);
  CHECK(tra_checked >= 30);
}

TEST_CASE("equivalence entails membership of both sides") {
  std::uint64_t s = 555;
  int checked = 0;
  for (const char* ty : type_corpus()) {
    syntax::TypeExpr a = parse_type(ty);
    for (int i = 0; i < 16; ++i) {
      Nat n(mix(s) % 12), m(mix(s) % 12);
      // the diagonal keeps the decided-holds density up
      for (const auto& [u, v] : {std::pair<Nat, Nat>{n, m}, {n, n}, {m, m}}) {
        if (equiv(u, v, a, kEmpty, kB).holds()) {
          ++checked;
          CHECK(member(u, a, kEmpty, kB).holds());
          CHECK(member(v, a, kEmpty, kB).holds());
        }
      }
    }
  }
  CHECK(checked >= 300);
}

TEST_CASE("numerical sets have numerical equality") {
  const char* numerical[] = {"N0", "N1", "N", "N1 + N1", "List(N1)",
                             "Sig (x in N1) N1", "Sig (x in N1 + N1) N1"};
  std::uint64_t s = 808;
  int checked = 0;
  for (const char* ty : numerical) {
    syntax::TypeExpr a = parse_type(ty);
    for (int i = 0; i < 45; ++i) {
      Nat n(mix(s) % 20), m(mix(s) % 20);
      Verdict e = equiv(n, m, a, kEmpty, kB);
      if (e.decided()) ++checked;
      if (e.holds()) CHECK(n == m);
    }
  }
  CHECK(checked >= 300);
}

TEST_CASE("proof irrelevance on propositions") {
  const char* props[] = {"Bot", "Id(N, 0, 0)", "Id(N1, star, star)",
                         "Bot \\/ Id(N, 0, 0)", "Id(N, 0, 0) /\\ Id(N, 0, 0)",
                         "Ex (x in N1) Id(N1, x, star)", "tau(bothat)",
                         "All (x in N1) Id(N1, x, x)"};
  std::uint64_t s = 4242;
  int checked = 0;
  for (const char* ty : props) {
    syntax::TypeExpr a = parse_type(ty);
    for (int i = 0; i < 95; ++i) {
      Nat n(mix(s) % 14), m(mix(s) % 14);
      Verdict vn = member(n, a, kEmpty, kB);
      Verdict vm = member(m, a, kEmpty, kB);
      if (vn.holds() && vm.holds()) {
        ++checked;
        CHECK(equiv(n, m, a, kEmpty, kB).holds());
      }
    }
  }
  CHECK(checked >= 300);
}

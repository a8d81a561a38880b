#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtt/interp.hpp"
#include "mtt/pca.hpp"
#include "mtt/setcodes.hpp"
#include "mtt/syntax.hpp"

using namespace mtt;
using setcodes::engine;

namespace {

const Budget kB{32, 64, 20000};

Nat code_of(const char* set_expr) {
  syntax::Term hat_t = syntax::hat(syntax::parse_type(set_expr));
  pca::EvalResult r = pca::run(interp::interpret(hat_t), 100000);
  REQUIRE(r.converged);
  return r.value;
}

Nat lam_const(const Nat& v) {
  return pca::encode(pca::make_lam(pca::make_const(v)));
}

std::uint64_t mix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("tag-table shapes are recognized") {
  CHECK(engine().is_set_code(pca::pair(Nat(1), Nat(0)), kB).holds());
  CHECK(engine().is_set_code(pca::pair(Nat(6), Nat(0)), kB).holds());
  // tag 1 with payload beyond 2 and tag 6 with nonzero payload are garbage
  CHECK(engine().is_set_code(pca::pair(Nat(1), Nat(5)), kB).fails());
  CHECK(engine().is_set_code(pca::pair(Nat(6), Nat(3)), kB).fails());
  CHECK(engine().is_set_code(Nat(17), kB).fails());
  CHECK(engine().is_set_code(Nat(0), kB).fails());
}

TEST_CASE("an identity code over the empty set fails Cond") {
  Nat bad = pca::pair(Nat(12), pca::pair(code_of("N0"), pca::pair(Nat(0), Nat(0))));
  CHECK(engine().is_set_code(bad, kB).fails());
}

TEST_CASE("membership clauses for the ground sets") {
  Nat n0 = code_of("N0"), n1 = code_of("N1"), n = code_of("N");
  CHECK(engine().member(Nat(0), n1, kB).holds());
  CHECK(engine().member(Nat(3), n1, kB).fails());
  for (std::uint64_t t = 0; t < 10; ++t) {
    CHECK(engine().member(Nat(t), n0, kB).fails());
    CHECK(engine().not_member(Nat(t), n0, kB).holds());
    CHECK(engine().member(Nat(t), n, kB).holds());
    CHECK(engine().not_member(Nat(t), n, kB).fails());
  }
}

TEST_CASE("equality clauses") {
  Nat n1 = code_of("N1"), n = code_of("N");
  CHECK(engine().eq(Nat(0), Nat(0), n1, kB).holds());
  CHECK(engine().eq(Nat(2), Nat(2), n, kB).holds());
  CHECK(engine().eq(Nat(2), Nat(3), n, kB).fails());
  CHECK(engine().neq(Nat(2), Nat(3), n, kB).holds());
}

TEST_CASE("function-space codes over the singleton") {
  Nat n1 = code_of("N1");
  Nat pi_code = pca::pair(Nat(2), pca::pair(n1, lam_const(n1)));
  CHECK(engine().is_set_code(pi_code, kB).holds());
  Nat idc = pca::encode(pca::make_lam(pca::make_var(0)));
  CHECK(engine().member(idc, pi_code, kB).holds());
  // two extensionally equal constant-zero programs are equal in the code
  Nat c0a = lam_const(Nat(0));
  Nat c0b = pca::encode(pca::make_lam(pca::make_app(
      pca::make_prim(pca::PrimId::P1),
      pca::make_apps(pca::make_prim(pca::PrimId::Pair),
                     {pca::make_const(0), pca::make_var(0)}))));
  CHECK(engine().eq(c0a, c0b, pi_code, kB).holds());
  // a code that moves 0 to 1 is not a member (1 is outside N1)
  Nat succ_c = pca::code_of_prim(pca::PrimId::Succ);
  CHECK(engine().member(succ_c, pi_code, kB).fails());
}

TEST_CASE("family conditions") {
  Nat n1 = code_of("N1"), n = code_of("N");
  CHECK(engine().fam(lam_const(n), n1, kB).holds());
  CHECK(engine().fam(lam_const(n), n, kB).holds());  // constant family over N
  // Set(17) fails structurally, so nothing is a family over it
  CHECK(engine().fam(lam_const(n), Nat(17), kB).fails());
  // the identity is not a family over N: t=0 is already a counterexample,
  // since Set(0) fails
  CHECK(engine().fam(pca::encode(pca::make_lam(pca::make_var(0))), n, kB).fails());
}

TEST_CASE("small propositions: membership is realizability, equality is trivial") {
  Nat bot = code_of("Bot");
  Nat id_true = code_of("Id(N, 0, 0)");
  Nat id_false = code_of("Id(N, 0, succ(0))");
  for (std::uint64_t t = 0; t < 8; ++t) {
    CHECK(engine().member(Nat(t), bot, kB).fails());
    CHECK(engine().member(Nat(t), id_true, kB).holds());
    CHECK(engine().member(Nat(t), id_false, kB).fails());
  }
  CHECK(engine().eq(Nat(3), Nat(9), id_true, kB).holds());  // proof irrelevance
  Nat disj = code_of("Bot \\/ Id(N1, star, star)");
  CHECK(engine().member(pca::pair(Nat(1), Nat(0)), disj, kB).holds());
  CHECK(engine().member(pca::pair(Nat(0), Nat(0)), disj, kB).fails());
}

TEST_CASE("never both member and non-member on decided samples") {
  std::vector<Nat> codes = {
      code_of("N0"), code_of("N1"), code_of("N"), code_of("N1 + N1"),
      code_of("List(N1)"), code_of("Bot"), code_of("Id(N, 0, 0)"),
      code_of("Id(N, 0, 0) /\\ Bot"), code_of("Sig (x in N1) N1"),
      pca::pair(Nat(2), pca::pair(code_of("N1"), lam_const(code_of("N1")))),
  };
  std::uint64_t s = 11;
  for (const Nat& c : codes) {
    for (int i = 0; i < 24; ++i) {
      Nat t(mix(s) % 40);
      Verdict in = engine().member(t, c, kB);
      Verdict out = engine().not_member(t, c, kB);
      CHECK_FALSE((in.holds() && out.holds()));
      Nat u(mix(s) % 40);
      Verdict e = engine().eq(t, u, c, kB);
      Verdict ne = engine().neq(t, u, c, kB);
      CHECK_FALSE((e.holds() && ne.holds()));
    }
  }
}

TEST_CASE("tag discipline") {
  std::uint64_t s = 77;
  for (int i = 0; i < 400; ++i) {
    Nat n(mix(s) % 100000);
    if (engine().is_set_code(n, kB).holds()) {
      Nat tag = pca::proj1(n);
      CHECK(Nat(1) <= tag);
      CHECK(tag <= Nat(12));
    }
  }
}

TEST_CASE("verdicts are monotone under budget growth") {
  Budget small{8, 8, 2000};
  Budget large{32, 64, 20000};
  std::uint64_t s = 5;
  for (int i = 0; i < 200; ++i) {
    Nat n(mix(s) % 3000), t(mix(s) % 30);
    Verdict vs = engine().member(t, n, small);
    Verdict vl = engine().member(t, n, large);
    if (vs.decided()) CHECK(vs.truth == vl.truth);
    Verdict ss = engine().is_set_code(n, small);
    Verdict sl = engine().is_set_code(n, large);
    if (ss.decided()) CHECK(ss.truth == sl.truth);
  }
}

TEST_CASE("finite carriers are exhaustive") {
  auto fm = engine().finite_members(code_of("N1 + N1"), kB);
  REQUIRE(fm.has_value());
  CHECK(fm->size() == 2);
  CHECK((*fm)[0] == pca::pair(Nat(0), Nat(0)));
  CHECK((*fm)[1] == pca::pair(Nat(1), Nat(0)));
  // everything in the list is a member; sampled outsiders are not
  for (std::uint64_t t = 0; t < 30; ++t) {
    bool listed = false;
    for (const Nat& m : *fm) listed = listed || m == Nat(t);
    CHECK(engine().member(Nat(t), code_of("N1 + N1"), kB).holds() == listed);
  }
  CHECK_FALSE(engine().finite_members(code_of("N"), kB).has_value());
  CHECK_FALSE(engine().finite_members(code_of("List(N1)"), kB).has_value());
  auto empty_list = engine().finite_members(code_of("List(N0)"), kB);
  REQUIRE(empty_list.has_value());
  CHECK(*empty_list == std::vector<Nat>{Nat(0)});
}

TEST_CASE("realizer-set summaries") {
  CHECK(engine().summarize(code_of("Bot"), kB).kind == setcodes::Summary::Empty);
  CHECK(engine().summarize(code_of("Id(N, 0, 0)"), kB).kind ==
        setcodes::Summary::AllNat);
  CHECK(engine().summarize(code_of("Id(N, 0, succ(0))"), kB).kind ==
        setcodes::Summary::Empty);
  auto s = engine().summarize(code_of("N1"), kB);
  CHECK(s.kind == setcodes::Summary::Finite);
  REQUIRE(s.elems.size() == 1);
  CHECK(s.elems[0] == Nat(0));
  CHECK(engine().summarize(Nat(17), kB).kind == setcodes::Summary::Empty);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtt/pca.hpp"

using namespace mtt;
using namespace mtt::pca;

namespace {

// Independent Cantor oracle: the closed formula for pairing, and inversion
// by linear search over the diagonal.
std::uint64_t cantor(std::uint64_t x, std::uint64_t y) {
  return (x + y) * (x + y + 1) / 2 + y;
}

std::pair<std::uint64_t, std::uint64_t> cantor_inv(std::uint64_t n) {
  std::uint64_t w = 0;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  std::uint64_t y = n - w * (w + 1) / 2;
  return {w - y, y};
}

std::uint64_t mix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Nat id_code() { return encode(make_lam(make_var(0))); }

}  // namespace

TEST_CASE("cantor pairing matches the closed formula") {
  CHECK(pair(Nat(0), Nat(0)) == Nat(0));
  CHECK(pair(Nat(1), Nat(0)) == Nat(1));  // (1+0)(1+0+1)/2 + 0
  CHECK(pair(Nat(0), Nat(1)) == Nat(2));  // (0+1)(0+1+1)/2 + 1
  for (std::uint64_t x = 0; x < 40; ++x)
    for (std::uint64_t y = 0; y < 40; ++y)
      CHECK(pair(Nat(x), Nat(y)) == Nat(cantor(x, y)));
}

TEST_CASE("projections invert pairing") {
  CHECK(proj1(Nat(0)) == Nat(0));
  CHECK(proj1(Nat(2)) == Nat(0));
  CHECK(proj2(Nat(2)) == Nat(1));
  CHECK(proj2(Nat(1)) == Nat(0));
  for (std::uint64_t n = 0; n < 300; ++n) {
    auto [x, y] = cantor_inv(n);
    CHECK(proj1(Nat(n)) == Nat(x));
    CHECK(proj2(Nat(n)) == Nat(y));
    CHECK(pair(proj1(Nat(n)), proj2(Nat(n))) == Nat(n));
  }
  // huge values round trip too
  Nat big = Nat::from_string("123456789012345678901234567890");
  auto [a, b] = unpair(pair(big, Nat(77)));
  CHECK(a == big);
  CHECK(b == Nat(77));
}

TEST_CASE("decode is total and encode round trips structurally") {
  std::uint64_t s = 42;
  for (int i = 0; i < 500; ++i) {
    Nat n(mix(s) % 100000);
    Program p = decode(n);
    Program q = decode(encode(p));
    CHECK(structurally_equal(p, q));
  }
}

TEST_CASE("encode(decode(n)) is observationally n") {
  // Both codes applied to the same argument behave identically.
  std::uint64_t s = 7;
  for (int i = 0; i < 60; ++i) {
    Nat n(mix(s) % 5000);
    Nat m = encode(decode(n));
    Nat arg(mix(s) % 50);
    EvalResult r1 = apply(n, arg, 400);
    EvalResult r2 = apply(m, arg, 400);
    CHECK(r1.converged == r2.converged);
    if (r1.converged) CHECK(r1.value == r2.value);
  }
}

TEST_CASE("kleene application basics") {
  CHECK(apply(id_code(), Nat(7), 100).value == Nat(7));
  CHECK(apply(code_of_prim(PrimId::Succ), Nat(4), 100).value == Nat(5));
  // {ite}(0,m,l) = m and {ite}(n+1,m,l) = l
  CHECK(apply_many(code_of_prim(PrimId::Ite), {Nat(0), Nat(11), Nat(22)}, 100).value ==
        Nat(11));
  CHECK(apply_many(code_of_prim(PrimId::Ite), {Nat(3), Nat(11), Nat(22)}, 100).value ==
        Nat(22));
}

TEST_CASE("lambda abstraction satisfies the s-m-n equations") {
  // lam of a constant
  Nat k3 = lam(make_const(3));
  CHECK(apply(k3, Nat(9), 100).value == Nat(3));
  // lam(succ x)
  Nat sx = lam(make_app(make_prim(PrimId::Succ), make_var(0)));
  CHECK(apply(sx, Nat(4), 100).value == Nat(5));
  // {Lx.Ly.x}(a,b) = a on samples
  Nat fst = encode(make_lam(make_lam(make_var(1))));
  std::uint64_t s = 3;
  for (int i = 0; i < 40; ++i) {
    Nat a(mix(s) % 101), b(mix(s) % 101);
    CHECK(apply_many(fst, {a, b}, 200).value == a);
  }
  CHECK_THROWS_AS(lam(make_var(1)), std::invalid_argument);
}

TEST_CASE("s-m-n law: applying lam(t) agrees with substituted evaluation") {
  std::uint64_t s = 99;
  for (int i = 0; i < 200; ++i) {
    // generate a small body over one variable
    std::vector<Program> pool;
    pool.push_back(make_var(0));
    pool.push_back(make_const(mix(s) % 7));
    for (int d = 0; d < 4; ++d) {
      Program a = pool[mix(s) % pool.size()];
      Program b = pool[mix(s) % pool.size()];
      switch (mix(s) % 4) {
        case 0: pool.push_back(make_app(make_prim(PrimId::Succ), a)); break;
        case 1: pool.push_back(make_apps(make_prim(PrimId::Pair), {a, b})); break;
        case 2: pool.push_back(make_app(make_prim(PrimId::P1), a)); break;
        default: pool.push_back(make_apps(make_prim(PrimId::Ite), {a, b, a})); break;
      }
    }
    Program body = pool.back();
    Nat arg(mix(s) % 40);
    EvalResult via_lam = apply(lam(body), arg, 2000);
    EvalResult direct = run(substitute_outer(body, make_const(arg)), 2000);
    CHECK(via_lam.converged == direct.converged);
    if (via_lam.converged) CHECK(via_lam.value == direct.value);
  }
}

TEST_CASE("rec satisfies its defining equations") {
  Nat step = encode(make_lam(make_lam(make_app(make_prim(PrimId::Succ), make_var(0)))));
  CHECK(rec_apply(Nat(7), Nat(123456), Nat(0), 100).value == Nat(7));
  CHECK(rec_apply(Nat(0), step, Nat(3), 1000).value == Nat(3));
  std::uint64_t s = 5;
  for (int i = 0; i < 60; ++i) {
    Nat n(mix(s) % 20), k(mix(s) % 12);
    // {rec}(n,m,k+1) = {m}(k, {rec}(n,m,k))
    Nat k1 = k + Nat(1);
    EvalResult lhs = rec_apply(n, step, k1, 5000);
    EvalResult inner = rec_apply(n, step, k, 5000);
    REQUIRE(lhs.converged);
    REQUIRE(inner.converged);
    EvalResult rhs = apply_many(step, {k, inner.value}, 5000);
    CHECK(lhs.value == rhs.value);
  }
}

TEST_CASE("listrec satisfies its defining equations") {
  // m picks the element: {m}(k,x,acc) = succ(acc)
  Nat m = encode(make_lam(make_lam(make_lam(
      make_app(make_prim(PrimId::Succ), make_var(0))))));
  CHECK(listrec_apply(Nat(5), m, list_empty(), 100).value == Nat(5));
  std::uint64_t s = 17;
  for (int i = 0; i < 60; ++i) {
    Nat k = list_of({Nat(mix(s) % 9), Nat(mix(s) % 9)});
    Nat x(mix(s) % 9);
    Nat n(mix(s) % 9);
    EvalResult lhs = listrec_apply(n, m, list_cnc(k, x), 5000);
    EvalResult inner = listrec_apply(n, m, k, 5000);
    REQUIRE(lhs.converged);
    EvalResult rhs = apply_many(m, {k, x, inner.value}, 5000);
    CHECK(lhs.value == rhs.value);
  }
}

TEST_CASE("list coding") {
  CHECK(list_empty() == Nat(0));
  Nat single = list_cnc(list_empty(), Nat(9));
  CHECK(list_lh(single) == Nat(1));
  CHECK(list_component(single, Nat(0)) == Nat(9));
  Nat two = list_cnc(list_cnc(Nat(0), Nat(1)), Nat(2));
  CHECK(list_lh(two) == Nat(2));
  CHECK(list_component(two, Nat(0)) == Nat(1));
  CHECK(list_component(two, Nat(1)) == Nat(2));
  CHECK_THROWS_AS(list_component(two, Nat(2)), std::out_of_range);
  // lh(cnc(k,x)) = lh(k)+1 and components shift correctly
  std::uint64_t s = 23;
  Nat k = list_of({Nat(3), Nat(1), Nat(4)});
  for (int i = 0; i < 30; ++i) {
    Nat x(mix(s) % 50);
    Nat c = list_cnc(k, x);
    CHECK(list_lh(c) == list_lh(k) + Nat(1));
    CHECK(list_component(c, list_lh(k)) == x);
    for (Nat j(0); j < list_lh(k); j += Nat(1))
      CHECK(list_component(c, j) == list_component(k, j));
  }
}

TEST_CASE("evaluation is deterministic and fuel-monotone") {
  std::uint64_t s = 31;
  for (int i = 0; i < 120; ++i) {
    Nat e(mix(s) % 4000);
    Nat x(mix(s) % 30);
    EvalResult small = apply(e, x, 150);
    EvalResult large = apply(e, x, 3000);
    if (small.converged) {
      CHECK(large.converged);
      CHECK(small.value == large.value);
      CHECK(small.steps == large.steps);
    }
  }
}

TEST_CASE("traces witness exactly the converging runs") {
  auto tr = trace_of(id_code(), Nat(5), 100);
  REQUIRE(tr.has_value());
  CHECK(tr->output == Nat(5));
  CHECK(kleene_T(id_code(), Nat(5), tr->code(), 1000));
  CHECK(kleene_U(tr->code()) == Nat(5));

  // malformed witness
  CHECK_FALSE(kleene_T(id_code(), Nat(5), Nat(0), 1000));
  // a trace of a different argument embeds its input
  auto tr7 = trace_of(id_code(), Nat(7), 100);
  REQUIRE(tr7.has_value());
  CHECK_FALSE(kleene_T(id_code(), Nat(5), tr7->code(), 1000));

  // the looping combinator has no witness at any sampled fuel
  Program om = make_lam(make_app(make_var(0), make_var(0)));
  Nat omega = encode(om);
  CHECK_FALSE(trace_of(omega, omega, 50).has_value());

  auto trs = trace_of(code_of_prim(PrimId::Succ), Nat(0), 100);
  REQUIRE(trs.has_value());
  CHECK(trs->output == Nat(1));
  CHECK(kleene_U(trs->code()) == Nat(1));
}

TEST_CASE("T/U adequacy on sampled codes") {
  std::uint64_t s = 91;
  for (int i = 0; i < 150; ++i) {
    Nat e(mix(s) % 2000);
    Nat x(mix(s) % 20);
    EvalResult r = apply(e, x, 200);
    auto tr = trace_of(e, x, 200);
    CHECK(r.converged == tr.has_value());
    if (tr) {
      CHECK(kleene_T(e, x, tr->code(), 100000));
      CHECK(kleene_U(tr->code()) == r.value);
    }
  }
}

TEST_CASE("the trace primitive reifies witnesses inside the model") {
  // {trace}(succ, 4) computes a code u with T(succ,4,u) and U(u)=5.
  Nat succ_code = code_of_prim(PrimId::Succ);
  EvalResult r = apply_many(code_of_prim(PrimId::TraceOf), {succ_code, Nat(4)}, 10000);
  REQUIRE(r.converged);
  CHECK(kleene_T(succ_code, Nat(4), r.value, 10000));
  CHECK(kleene_U(r.value) == Nat(5));
}

#include "mtt/realizability.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "mtt/interp.hpp"
#include "mtt/pca.hpp"

namespace mtt::realizability {

using syntax::TypeExpr;
using syntax::TypeKind;

namespace {

setcodes::Engine& codes() { return setcodes::engine(); }

std::optional<Nat> run_app(const Nat& fn, const Nat& arg, const Budget& b) {
  return pca::apply_cached(fn, arg, b.fuel);
}

Verdict arith(bool v) { return v ? Verdict::yes() : Verdict::no(); }

SemEnv extend(SemEnv env, const std::string& x, const Nat& v) {
  env.insert_or_assign(x, v);
  return env;
}

// A x (x eps J(A) -> body(x)), carrier-driven.
Verdict forall_J(const TypeExpr& a, const SemEnv& env, const Budget& b,
                 const std::function<Verdict(const Nat&)>& body) {
  Carrier c = classify_carrier(a, env, b);
  if (c.kind == Carrier::Empty) return Verdict::yes(0);
  if (c.kind == Carrier::Finite) {
    Verdict acc = Verdict::yes(0);
    for (const Nat& x : c.elems) acc = v_and(acc, body(x));
    return acc;
  }
  for (std::uint64_t i = 0; i <= b.enum_bound; ++i) {
    Nat x(i);
    Verdict guard = c.kind == Carrier::NumericUnbounded
                        ? Verdict::yes(0)
                        : member(x, a, env, b);
    if (guard.fails()) continue;
    Verdict inst = v_or(v_not(guard), body(x));
    if (inst.fails()) return inst;
  }
  return Verdict::maybe(Why::EnumBound);
}

// E x (x eps J(A) /\ body(x)).
Verdict exists_J(const TypeExpr& a, const SemEnv& env, const Budget& b,
                 const std::function<Verdict(const Nat&)>& body) {
  Carrier c = classify_carrier(a, env, b);
  if (c.kind == Carrier::Empty) return Verdict::no(0);
  if (c.kind == Carrier::Finite) {
    Verdict acc = Verdict::no(0);
    for (const Nat& x : c.elems) acc = v_or(acc, body(x));
    return acc;
  }
  for (std::uint64_t i = 0; i <= b.enum_bound; ++i) {
    Nat x(i);
    Verdict guard = c.kind == Carrier::NumericUnbounded
                        ? Verdict::yes(0)
                        : member(x, a, env, b);
    if (guard.fails()) continue;
    Verdict inst = v_and(guard, body(x));
    if (inst.holds()) return inst;
  }
  return Verdict::maybe(Why::EnumBound);
}

// A x A y (x ~_A y -> body(x,y)).
Verdict forall_equiv_pairs(const TypeExpr& a, const SemEnv& env, const Budget& b,
                           const std::function<Verdict(const Nat&, const Nat&)>& body) {
  Carrier c = classify_carrier(a, env, b);
  if (c.kind == Carrier::Empty) return Verdict::yes(0);
  if (c.kind == Carrier::Finite) {
    Verdict acc = Verdict::yes(0);
    for (const Nat& x : c.elems)
      for (const Nat& y : c.elems) {
        Verdict guard = equiv(x, y, a, env, b);
        if (guard.fails()) continue;
        acc = v_and(acc, v_or(v_not(guard), body(x, y)));
      }
    return acc;
  }
  if (c.kind == Carrier::NumericUnbounded && c.numeric) {
    // Equivalence is numeric equality: only diagonal pairs matter.
    for (std::uint64_t i = 0; i <= b.enum_bound; ++i) {
      Nat x(i);
      Verdict inst = v_or(v_not(member(x, a, env, b)), body(x, x));
      if (inst.fails()) return inst;
    }
    return Verdict::maybe(Why::EnumBound);
  }
  std::uint64_t lim = std::min<std::uint64_t>(b.enum_bound, 24);
  for (std::uint64_t i = 0; i <= lim; ++i)
    for (std::uint64_t j = 0; j <= lim; ++j) {
      Nat x(i), y(j);
      Verdict guard = equiv(x, y, a, env, b);
      if (guard.fails()) continue;
      Verdict inst = v_or(v_not(guard), body(x, y));
      if (inst.fails()) return inst;
    }
  return Verdict::maybe(Why::EnumBound);
}

// A x (x ~_A pivot -> body(x)). Exact for numeric carriers.
Verdict forall_equiv_class(const TypeExpr& a, const SemEnv& env, const Budget& b,
                           const Nat& pivot,
                           const std::function<Verdict(const Nat&)>& body) {
  Carrier c = classify_carrier(a, env, b);
  if (c.kind == Carrier::Empty) return Verdict::yes(0);
  if (c.kind == Carrier::Finite) {
    Verdict acc = Verdict::yes(0);
    for (const Nat& x : c.elems) {
      Verdict guard = equiv(x, pivot, a, env, b);
      if (guard.fails()) continue;
      acc = v_and(acc, v_or(v_not(guard), body(x)));
    }
    return acc;
  }
  if (c.kind == Carrier::NumericUnbounded && c.numeric)
    return v_or(v_not(member(pivot, a, env, b)), body(pivot));
  std::uint64_t lim = b.enum_bound;
  for (std::uint64_t i = 0; i <= lim; ++i) {
    Nat x(i);
    Verdict guard = equiv(x, pivot, a, env, b);
    if (guard.fails()) continue;
    Verdict inst = v_or(v_not(guard), body(x));
    if (inst.fails()) return inst;
  }
  return Verdict::maybe(Why::EnumBound);
}

}  // namespace

std::optional<Nat> eval_term(const syntax::Term& t, const SemEnv& env,
                             const Budget& b) {
  std::vector<std::string> vars;
  std::vector<Nat> vals;
  for (const auto& v : syntax::free_vars(t)) {
    auto it = env.find(v);
    if (it == env.end())
      throw std::invalid_argument("eval_term: unbound variable '" + v + "'");
    vars.push_back(v);
    vals.push_back(it->second);
  }
  // Quantifier bodies re-evaluate the same terms at the same assignments
  // over and over; memoize on the printed term plus its cut-down env.
  struct Entry {
    bool converged;
    Nat value;
    std::uint64_t fuel_tried;
  };
  thread_local std::unordered_map<std::string, Entry> cache;
  std::string key = syntax::to_string(t);
  for (std::size_t i = 0; i < vars.size(); ++i)
    key += "|" + vars[i] + "=" + vals[i].to_string();
  auto it = cache.find(key);
  if (it != cache.end()) {
    if (it->second.converged) return it->second.value;
    if (b.fuel <= it->second.fuel_tried) return std::nullopt;
  }
  pca::Program p = interp::interpret_in_context(t, vars);
  for (const Nat& v : vals) p = pca::make_app(p, pca::make_const(v));
  pca::EvalResult r = pca::run(p, b.fuel);
  if (cache.size() > 100000) cache.clear();
  cache[key] = Entry{r.converged, r.value, b.fuel};
  if (!r.converged) return std::nullopt;
  return r.value;
}

// ---------------------------------------------------------------------------
// Carrier classification

Carrier classify_carrier(const TypeExpr& a, const SemEnv& env, const Budget& b) {
  Carrier out;
  if (b.depth == 0) return out;
  Budget b2 = b.shallower();
  switch (a->kind) {
    case TypeKind::N0:
      out.kind = Carrier::Empty;
      out.numeric = true;
      return out;
    case TypeKind::N1:
      out.kind = Carrier::Finite;
      out.elems = {Nat(0)};
      out.numeric = true;
      return out;
    case TypeKind::N:
      out.kind = Carrier::NumericUnbounded;
      out.numeric = true;
      return out;
    case TypeKind::Plus: {
      Carrier l = classify_carrier(a->a, env, b2);
      Carrier r = classify_carrier(a->b, env, b2);
      out.numeric = l.numeric && r.numeric;
      if (l.complete() && r.complete()) {
        out.kind = Carrier::Finite;
        for (const Nat& x : l.elems) out.elems.push_back(pca::pair(Nat(0), x));
        for (const Nat& y : r.elems) out.elems.push_back(pca::pair(Nat(1), y));
        if (out.elems.empty()) out.kind = Carrier::Empty;
        return out;
      }
      out.kind = Carrier::Opaque;
      out.numeric = false;
      return out;
    }
    case TypeKind::Sigma: {
      Carrier dom = classify_carrier(a->a, env, b2);
      if (!dom.complete()) {
        out.numeric = false;
        return out;
      }
      bool numeric = dom.numeric;
      out.kind = Carrier::Finite;
      for (const Nat& x : dom.elems) {
        Carrier inner = classify_carrier(a->b, extend(env, a->bound, x), b2);
        if (!inner.complete()) return Carrier{};
        numeric = numeric && inner.numeric;
        for (const Nat& y : inner.elems) {
          Nat cand = pca::pair(x, y);
          if (member(cand, a, env, b).holds()) out.elems.push_back(cand);
        }
      }
      if (out.elems.empty()) out.kind = Carrier::Empty;
      out.numeric = numeric;
      return out;
    }
    case TypeKind::List: {
      Carrier inner = classify_carrier(a->a, env, b2);
      out.numeric = inner.numeric;
      if (inner.kind == Carrier::Empty) {
        out.kind = Carrier::Finite;
        out.elems = {Nat(0)};
        return out;
      }
      // Lists over an inhabited set are unbounded, so never Finite.
      out.kind = Carrier::Opaque;
      return out;
    }
    case TypeKind::Pi: {
      Carrier dom = classify_carrier(a->a, env, b2);
      if (dom.kind == Carrier::Empty) out.kind = Carrier::NumericUnbounded;
      else if (dom.kind == Carrier::Finite) {
        for (const Nat& x : dom.elems) {
          Carrier inner = classify_carrier(a->b, extend(env, a->bound, x), b2);
          if (inner.kind == Carrier::Empty) {
            out.kind = Carrier::Empty;
            break;
          }
        }
      }
      return out;
    }
    case TypeKind::Bot:
      out.kind = Carrier::Empty;
      return out;
    case TypeKind::Id: {
      auto vt = eval_term(a->t, env, b2);
      auto vs = eval_term(a->t2, env, b2);
      if (!vt || !vs) return out;
      Verdict e = equiv(*vt, *vs, a->a, env, b2);
      if (e.holds()) out.kind = Carrier::NumericUnbounded;
      else if (e.fails()) out.kind = Carrier::Empty;
      return out;
    }
    case TypeKind::And: {
      Carrier l = classify_carrier(a->a, env, b2);
      Carrier r = classify_carrier(a->b, env, b2);
      if (l.complete() && r.complete()) {
        out.kind = Carrier::Finite;
        for (const Nat& x : l.elems)
          for (const Nat& y : r.elems) out.elems.push_back(pca::pair(x, y));
        if (out.elems.empty()) out.kind = Carrier::Empty;
      }
      return out;
    }
    case TypeKind::Or: {
      Carrier l = classify_carrier(a->a, env, b2);
      Carrier r = classify_carrier(a->b, env, b2);
      // Right realizers have arbitrary nonzero first component.
      if (r.kind == Carrier::Empty && l.complete()) {
        out.kind = Carrier::Finite;
        for (const Nat& x : l.elems) out.elems.push_back(pca::pair(Nat(0), x));
        if (out.elems.empty()) out.kind = Carrier::Empty;
      }
      return out;
    }
    case TypeKind::Imp: {
      Carrier l = classify_carrier(a->a, env, b2);
      if (l.kind == Carrier::Empty) out.kind = Carrier::NumericUnbounded;
      else {
        Carrier r = classify_carrier(a->b, env, b2);
        if (r.kind == Carrier::Empty && l.kind == Carrier::Finite)
          out.kind = Carrier::Empty;
      }
      return out;
    }
    case TypeKind::Exists: {
      Carrier dom = classify_carrier(a->a, env, b2);
      if (!dom.complete()) return out;
      out.kind = Carrier::Finite;
      for (const Nat& x : dom.elems) {
        Carrier inner = classify_carrier(a->b, extend(env, a->bound, x), b2);
        if (!inner.complete()) return Carrier{};
        for (const Nat& y : inner.elems) {
          Nat cand = pca::pair(x, y);
          if (member(cand, a, env, b).holds()) out.elems.push_back(cand);
        }
      }
      if (out.elems.empty()) out.kind = Carrier::Empty;
      return out;
    }
    case TypeKind::Forall: {
      Carrier dom = classify_carrier(a->a, env, b2);
      if (dom.kind == Carrier::Empty) out.kind = Carrier::NumericUnbounded;
      else if (dom.kind == Carrier::Finite) {
        for (const Nat& x : dom.elems) {
          Carrier inner = classify_carrier(a->b, extend(env, a->bound, x), b2);
          if (inner.kind == Carrier::Empty) {
            out.kind = Carrier::Empty;
            break;
          }
        }
      }
      return out;
    }
    case TypeKind::Tau: {
      auto code = eval_term(a->t, env, b2);
      if (!code) return out;
      setcodes::Summary s = codes().summarize(*code, b2);
      switch (s.kind) {
        case setcodes::Summary::Empty: out.kind = Carrier::Empty; break;
        case setcodes::Summary::AllNat: out.kind = Carrier::NumericUnbounded; break;
        case setcodes::Summary::Finite:
          out.kind = Carrier::Finite;
          out.elems = s.elems;
          break;
        case setcodes::Summary::Opaque: break;
      }
      return out;
    }
    case TypeKind::SetUniverse:
    case TypeKind::PropS:
    case TypeKind::FunToPropS:
      return out;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Membership

Verdict member(const Nat& n, const TypeExpr& a, const SemEnv& env, const Budget& b) {
  if (b.depth == 0) return Verdict::maybe(Why::Depth);
  Budget b2 = b.shallower();
  switch (a->kind) {
    case TypeKind::N0: return Verdict::no();
    case TypeKind::N1: return arith(n.is_zero());
    case TypeKind::N: return Verdict::yes();
    case TypeKind::Pi: {
      Verdict total = forall_J(a->a, env, b2, [&](const Nat& x) {
        auto nx = run_app(n, x, b2);
        if (!nx) return Verdict::maybe(Why::Fuel);
        return member(*nx, a->b, extend(env, a->bound, x), b2);
      });
      Verdict ext = forall_equiv_pairs(a->a, env, b2, [&](const Nat& x, const Nat& y) {
        auto nx = run_app(n, x, b2);
        auto ny = run_app(n, y, b2);
        if (!nx || !ny) return Verdict::maybe(Why::Fuel);
        return equiv(*nx, *ny, a->b, extend(env, a->bound, x), b2);
      });
      return v_and(total, ext);
    }
    case TypeKind::Sigma: {
      auto [p1, p2] = pca::unpair(n);
      Verdict fst = member(p1, a->a, env, b2);
      Nat snd = p2;
      Verdict rest = forall_equiv_class(a->a, env, b2, p1, [&](const Nat& x) {
        return member(snd, a->b, extend(env, a->bound, x), b2);
      });
      return v_and(fst, rest);
    }
    case TypeKind::Plus: {
      auto [p1, p2] = pca::unpair(n);
      return v_or(v_and(arith(p1.is_zero()), member(p2, a->a, env, b2)),
                  v_and(arith(p1 == Nat(1)), member(p2, a->b, env, b2)));
    }
    case TypeKind::List: {
      Verdict acc = Verdict::yes(0);
      for (const Nat& el : pca::list_elements(n))
        acc = v_and(acc, member(el, a->a, env, b2));
      return acc;
    }
    case TypeKind::SetUniverse: {
      // Set(n) plus both complementation conditions; the certificate is the
      // exact bounded form of  A t (t eps n <-> not t noteps n)  and its
      // equality twin.
      Verdict set_n = codes().is_set_code(n, b2);
      return v_and(set_n, codes().complementary(n, b2));
    }
    case TypeKind::PropS: {
      // The proof-irrelevance biconditional holds by construction for every
      // small-proposition tag, so membership reduces to Set-membership plus
      // the tag bound.
      Verdict in_set = member(n, syntax::ty_leaf(TypeKind::SetUniverse), env, b2);
      return v_and(in_set, arith(Nat(5) < pca::proj1(n)));
    }
    case TypeKind::FunToPropS:
      return member_funtoprops(n, a->a, env, b2);
    default:
      return realizes(n, a, env, b);
  }
}

// ---------------------------------------------------------------------------
// Realizability

Verdict realizes(const Nat& n, const TypeExpr& phi, const SemEnv& env,
                 const Budget& b) {
  if (b.depth == 0) return Verdict::maybe(Why::Depth);
  Budget b2 = b.shallower();
  switch (phi->kind) {
    case TypeKind::Bot: return Verdict::no();
    case TypeKind::And: {
      auto [p1, p2] = pca::unpair(n);
      return v_and(realizes(p1, phi->a, env, b2), realizes(p2, phi->b, env, b2));
    }
    case TypeKind::Or: {
      auto [p1, p2] = pca::unpair(n);
      return v_or(v_and(arith(p1.is_zero()), realizes(p2, phi->a, env, b2)),
                  v_and(arith(!p1.is_zero()), realizes(p2, phi->b, env, b2)));
    }
    case TypeKind::Imp:
      return forall_J(phi->a, env, b2, [&](const Nat& t) {
        auto nt = run_app(n, t, b2);
        if (!nt) return Verdict::maybe(Why::Fuel);
        return realizes(*nt, phi->b, env, b2);
      });
    case TypeKind::Exists: {
      auto [p1, p2] = pca::unpair(n);
      Verdict wit = member(p1, phi->a, env, b2);
      return v_and(wit, realizes(p2, phi->b, extend(env, phi->bound, p1), b2));
    }
    case TypeKind::Forall:
      return forall_J(phi->a, env, b2, [&](const Nat& x) {
        auto nx = run_app(n, x, b2);
        if (!nx) return Verdict::maybe(Why::Fuel);
        return realizes(*nx, phi->b, extend(env, phi->bound, x), b2);
      });
    case TypeKind::Id: {
      auto vt = eval_term(phi->t, env, b2);
      auto vs = eval_term(phi->t2, env, b2);
      if (!vt || !vs) return Verdict::maybe(Why::Fuel);
      return equiv(*vt, *vs, phi->a, env, b2);
    }
    case TypeKind::Tau: {
      auto code = eval_term(phi->t, env, b2);
      if (!code) return Verdict::maybe(Why::Fuel);
      return codes().member(n, *code, b2);
    }
    default:
      // Realizability of a set expression is just membership.
      return member(n, phi, env, b);
  }
}

// ---------------------------------------------------------------------------
// Equivalence

Verdict equiv_props_codes(const Nat& u, const Nat& v, const Budget& b) {
  if (u == v) return Verdict::yes();
  setcodes::Summary su = codes().summarize(u, b);
  setcodes::Summary sv = codes().summarize(v, b);
  auto complete = [](const setcodes::Summary& s) {
    return s.kind != setcodes::Summary::Opaque;
  };
  if (complete(su) && complete(sv)) {
    if (su.kind != sv.kind) {
      // Distinct complete kinds always differ; for Finite vs AllNat a
      // witness outside the finite list exists.
      if (su.kind == setcodes::Summary::Finite && sv.kind == setcodes::Summary::Empty)
        return arith(su.elems.empty());
      if (sv.kind == setcodes::Summary::Finite && su.kind == setcodes::Summary::Empty)
        return arith(sv.elems.empty());
      return Verdict::no();
    }
    if (su.kind == setcodes::Summary::Finite) {
      auto norm = [](std::vector<Nat> xs) {
        std::sort(xs.begin(), xs.end(),
                  [](const Nat& a, const Nat& c) { return a < c; });
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        return xs;
      };
      return arith(norm(su.elems) == norm(sv.elems));
    }
    return Verdict::yes();  // Empty==Empty or AllNat==AllNat
  }
  for (std::uint64_t i = 0; i <= b.enum_bound; ++i) {
    Nat t(i);
    Verdict iff = v_iff(codes().member(t, u, b), codes().member(t, v, b));
    if (iff.fails()) return iff;
  }
  return Verdict::maybe(Why::EnumBound);
}

namespace {

// A t A s (t ==_n s <-> t ==_m s) over sampled pairs; exact for certified
// finite codes.
Verdict same_code_equality(const Nat& n, const Nat& m, const Budget& b) {
  if (n == m) return Verdict::yes();
  auto fn = codes().finite_members(n, b);
  auto fm = codes().finite_members(m, b);
  if (fn && fm && codes().complementary(n, b).holds() &&
      codes().complementary(m, b).holds()) {
    std::vector<Nat> pool = *fn;
    pool.insert(pool.end(), fm->begin(), fm->end());
    Verdict acc = Verdict::yes(0);
    for (const Nat& t : pool)
      for (const Nat& s : pool)
        acc = v_and(acc, v_iff(codes().eq(t, s, n, b), codes().eq(t, s, m, b)));
    return acc;
  }
  std::uint64_t lim = std::min<std::uint64_t>(b.enum_bound, 24);
  for (std::uint64_t i = 0; i <= lim; ++i)
    for (std::uint64_t j = 0; j <= lim; ++j) {
      Verdict iff = v_iff(codes().eq(Nat(i), Nat(j), n, b),
                          codes().eq(Nat(i), Nat(j), m, b));
      if (iff.fails()) return iff;
    }
  return Verdict::maybe(Why::EnumBound);
}

}  // namespace

Verdict equiv(const Nat& n, const Nat& m, const TypeExpr& a, const SemEnv& env,
              const Budget& b) {
  if (b.depth == 0) return Verdict::maybe(Why::Depth);
  Budget b2 = b.shallower();
  switch (a->kind) {
    case TypeKind::N0: return Verdict::no();
    case TypeKind::N1: return arith(n.is_zero() && n == m);
    case TypeKind::N: return arith(n == m);
    case TypeKind::Pi: {
      Verdict both = v_and(member(n, a, env, b2), member(m, a, env, b2));
      Verdict ptwise = forall_J(a->a, env, b2, [&](const Nat& x) {
        auto nx = run_app(n, x, b2);
        auto mx = run_app(m, x, b2);
        if (!nx || !mx) return Verdict::maybe(Why::Fuel);
        return equiv(*nx, *mx, a->b, extend(env, a->bound, x), b2);
      });
      return v_and(both, ptwise);
    }
    case TypeKind::Sigma: {
      auto [p1n, p2n] = pca::unpair(n);
      auto [p1m, p2m] = pca::unpair(m);
      Verdict both = v_and(member(n, a, env, b2), member(m, a, env, b2));
      Verdict fst = equiv(p1n, p1m, a->a, env, b2);
      Nat sn = p2n, sm = p2m;
      Verdict snd = forall_equiv_class(a->a, env, b2, p1n, [&](const Nat& x) {
        return equiv(sn, sm, a->b, extend(env, a->bound, x), b2);
      });
      return v_and(both, v_and(fst, snd));
    }
    case TypeKind::Plus: {
      auto [p1n, p2n] = pca::unpair(n);
      auto [p1m, p2m] = pca::unpair(m);
      Verdict both = v_and(member(n, a, env, b2), member(m, a, env, b2));
      Verdict tags = arith(p1n == p1m);
      Verdict inner = v_or(
          v_and(arith(p1n.is_zero()), equiv(p2n, p2m, a->a, env, b2)),
          v_and(arith(p1n == Nat(1)), equiv(p2n, p2m, a->b, env, b2)));
      return v_and(both, v_and(tags, inner));
    }
    case TypeKind::List: {
      Verdict both = v_and(member(n, a, env, b2), member(m, a, env, b2));
      auto en = pca::list_elements(n);
      auto em = pca::list_elements(m);
      if (en.size() != em.size()) return v_and(both, Verdict::no());
      Verdict acc = Verdict::yes(0);
      for (std::size_t i = 0; i < en.size(); ++i)
        acc = v_and(acc, equiv(en[i], em[i], a->a, env, b2));
      return v_and(both, acc);
    }
    case TypeKind::SetUniverse: {
      Verdict both = v_and(member(n, a, env, b2), member(m, a, env, b2));
      Verdict mem_same = equiv_props_codes(n, m, b2);  // same carrier
      Verdict eq_same = same_code_equality(n, m, b2);
      return v_and(both, v_and(mem_same, eq_same));
    }
    case TypeKind::PropS: {
      Verdict both = v_and(member(n, a, env, b2), member(m, a, env, b2));
      return v_and(both, equiv_props_codes(n, m, b2));
    }
    case TypeKind::FunToPropS: {
      Verdict both = v_and(member(n, a, env, b2), member(m, a, env, b2));
      Verdict ptwise = forall_J(a->a, env, b2, [&](const Nat& t) {
        auto nt = run_app(n, t, b2);
        auto mt = run_app(m, t, b2);
        if (!nt || !mt) return Verdict::maybe(Why::Fuel);
        return equiv_props_codes(*nt, *mt, b2);
      });
      return v_and(both, ptwise);
    }
    case TypeKind::Tau: {
      auto code = eval_term(a->t, env, b2);
      if (!code) return Verdict::maybe(Why::Fuel);
      return v_and(codes().member(n, *code, b2), codes().member(m, *code, b2));
    }
    default:
      // Propositions are proof-irrelevant: any two realizers are equal.
      return v_and(realizes(n, a, env, b2), realizes(m, a, env, b2));
  }
}

Verdict member_funtoprops(const Nat& n, const TypeExpr& a, const SemEnv& env,
                          const Budget& b) {
  if (b.depth == 0) return Verdict::maybe(Why::Depth);
  Budget b2 = b.shallower();
  return forall_equiv_pairs(a, env, b2, [&](const Nat& t, const Nat& s) {
    auto nt = run_app(n, t, b2);
    auto ns = run_app(n, s, b2);
    if (!nt || !ns) return Verdict::maybe(Why::Fuel);
    Verdict in_props = v_and(
        member(*nt, syntax::ty_leaf(TypeKind::PropS), env, b2),
        member(*ns, syntax::ty_leaf(TypeKind::PropS), env, b2));
    return v_and(in_props, equiv_props_codes(*nt, *ns, b2));
  });
}

}  // namespace mtt::realizability

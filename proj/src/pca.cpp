#include "mtt/pca.hpp"

#include <cmath>
#include <unordered_map>
#include <limits>
#include <stdexcept>

namespace mtt::pca {

int prim_arity(PrimId p) {
  switch (p) {
    case PrimId::Succ: case PrimId::P1: case PrimId::P2: case PrimId::Lh:
      return 1;
    case PrimId::Pair: case PrimId::Cnc: case PrimId::Comp: case PrimId::TraceOf:
      return 2;
    case PrimId::Ite: case PrimId::Rec: case PrimId::ListRec:
      return 3;
  }
  return 1;
}

const char* prim_name(PrimId p) {
  switch (p) {
    case PrimId::Succ: return "succ";
    case PrimId::Pair: return "p";
    case PrimId::P1: return "p1";
    case PrimId::P2: return "p2";
    case PrimId::Ite: return "ite";
    case PrimId::Cnc: return "cnc";
    case PrimId::Rec: return "rec";
    case PrimId::ListRec: return "listrec";
    case PrimId::Lh: return "lh";
    case PrimId::Comp: return "comp";
    case PrimId::TraceOf: return "trace";
  }
  return "?";
}

Program make_const(Nat v) {
  auto n = std::make_shared<ProgramNode>();
  n->kind = ProgKind::Const;
  n->value = std::move(v);
  return n;
}

Program make_const(std::uint64_t v) { return make_const(Nat(v)); }

Program make_var(int index) {
  auto n = std::make_shared<ProgramNode>();
  n->kind = ProgKind::Var;
  n->index = index;
  return n;
}

Program make_app(Program f, Program a) {
  auto n = std::make_shared<ProgramNode>();
  n->kind = ProgKind::App;
  n->fun = std::move(f);
  n->arg = std::move(a);
  return n;
}

Program make_lam(Program body) {
  auto n = std::make_shared<ProgramNode>();
  n->kind = ProgKind::Lam;
  n->body = std::move(body);
  return n;
}

Program make_prim(PrimId p) {
  auto n = std::make_shared<ProgramNode>();
  n->kind = ProgKind::Prim;
  n->prim = p;
  return n;
}

Program make_apps(Program f, const std::vector<Program>& args) {
  for (const auto& a : args) f = make_app(f, a);
  return f;
}

namespace {

int max_free_index(const Program& p, int depth) {
  switch (p->kind) {
    case ProgKind::Const: case ProgKind::Prim: return -1;
    case ProgKind::Var: return p->index - depth;
    case ProgKind::App:
      return std::max(max_free_index(p->fun, depth), max_free_index(p->arg, depth));
    case ProgKind::Lam: return max_free_index(p->body, depth + 1);
  }
  return -1;
}

}  // namespace

bool is_closed(const Program& p) { return max_free_index(p, 0) < 0; }

bool structurally_equal(const Program& a, const Program& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ProgKind::Const: return a->value == b->value;
    case ProgKind::Var: return a->index == b->index;
    case ProgKind::App:
      return structurally_equal(a->fun, b->fun) && structurally_equal(a->arg, b->arg);
    case ProgKind::Lam: return structurally_equal(a->body, b->body);
    case ProgKind::Prim: return a->prim == b->prim;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Cantor pairing

Nat pair(const Nat& x, const Nat& y) {
  if (x.fits_u64() && y.fits_u64()) {
    std::uint64_t xu = x.as_u64(), yu = y.as_u64();
    if (xu < (1ull << 31) && yu < (1ull << 31)) {
      std::uint64_t s = xu + yu;
      return Nat(s * (s + 1) / 2 + yu);
    }
  }
  Nat s = x + y;
  return (s * (s + Nat(1))).half() + y;
}

std::pair<Nat, Nat> unpair(const Nat& n) {
  if (n.fits_u64()) {
    std::uint64_t z = n.as_u64();
    if (z < (1ull << 62)) {
      auto w = static_cast<std::uint64_t>(
          (std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
      while (w * (w + 1) / 2 > z) --w;
      while ((w + 1) * (w + 2) / 2 <= z) ++w;
      std::uint64_t y = z - w * (w + 1) / 2;
      return {Nat(w - y), Nat(y)};
    }
  }
  // w = floor((sqrt(8n+1)-1)/2), with a local fixup for rounding.
  auto tri = [](const Nat& w) { return (w * (w + Nat(1))).half(); };
  Nat s = Nat::isqrt(n * Nat(8) + Nat(1));
  Nat w = (s - Nat(1)).half();
  while (tri(w) > n) w -= Nat(1);
  while (tri(w + Nat(1)) <= n) w += Nat(1);
  Nat y = n - tri(w);
  return {w - y, y};
}

Nat proj1(const Nat& n) { return unpair(n).first; }
Nat proj2(const Nat& n) { return unpair(n).second; }

// ---------------------------------------------------------------------------
// Goedel numbering (tag = n mod 5)
//
//   5k   -> Const k          5i+1 -> Var i        5m+2 -> App(unpair m)
//   5b+3 -> Lam b            5p+4 -> Prim p       (p >= #prims: Const p)

Nat encode(const Program& p) {
  switch (p->kind) {
    case ProgKind::Const: return p->value * Nat(5);
    case ProgKind::Var: return Nat(static_cast<std::uint64_t>(p->index)) * Nat(5) + Nat(1);
    case ProgKind::App: return pair(encode(p->fun), encode(p->arg)) * Nat(5) + Nat(2);
    case ProgKind::Lam: return encode(p->body) * Nat(5) + Nat(3);
    case ProgKind::Prim:
      return Nat(static_cast<std::uint64_t>(p->prim)) * Nat(5) + Nat(4);
  }
  return Nat();
}

namespace {
Program decode_uncached(const Nat& n);
}  // namespace

Program decode(const Nat& n) {
  // Unfold steps {k}(x) -> App(decode k, x) re-decode the same constants
  // over and over; a bounded cache keeps that linear.
  thread_local std::unordered_map<Nat, Program, NatHash> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Program p = decode_uncached(n);
  if (cache.size() > 200000) cache.clear();
  cache.emplace(n, p);
  return p;
}

namespace {
Program decode_uncached(const Nat& n) {
  auto [q, r] = n.divmod(5);
  switch (r) {
    case 0: return make_const(std::move(q));
    case 1: {
      // Absurd indices only show up in garbage codes; such programs are
      // open and therefore never applicable anyway.
      int idx = q.fits_u64() && q.as_u64() < (1ull << 30)
                    ? static_cast<int>(q.as_u64())
                    : std::numeric_limits<int>::max() / 2;
      return make_var(idx);
    }
    case 2: {
      auto [f, a] = unpair(q);
      return make_app(decode(f), decode(a));
    }
    case 3: return make_lam(decode(q));
    default: {
      if (q.fits_u64() && q.as_u64() < static_cast<std::uint64_t>(kNumPrims))
        return make_prim(static_cast<PrimId>(q.as_u64()));
      return make_const(std::move(q));  // default-to-Const fallback
    }
  }
}
}  // namespace

// ---------------------------------------------------------------------------
// Machine

namespace {

// A value's identity as a natural number: a constant is itself, anything
// else stands for its own code.
Nat value_to_nat(const Program& v) {
  if (v->kind == ProgKind::Const) return v->value;
  return encode(v);
}

// Iterated pairing doubles numeral sizes, and coercing a value encodes it
// at a cost exponential in its applicative depth. Primitive applications on
// operands beyond this code-size bound are treated as undefined; everything
// the interpretation of actual terms produces stays far below it.
constexpr std::uint64_t kMaxValueBits = 1u << 17;

std::uint64_t code_bits(const Program& p, std::uint64_t cap) {
  switch (p->kind) {
    case ProgKind::Const: return p->value.bit_length() + 3;
    case ProgKind::Var: return 8;
    case ProgKind::Prim: return 8;
    case ProgKind::App: {
      std::uint64_t f = code_bits(p->fun, cap);
      if (f >= cap) return cap;
      std::uint64_t a = code_bits(p->arg, cap - f);
      return f + a + 4;
    }
    case ProgKind::Lam:
      return code_bits(p->body, cap) + 3;
  }
  return 8;
}

bool coercible(const Program& v) {
  return code_bits(v, kMaxValueBits + 64) <= kMaxValueBits;
}

Nat value_to_nat(const Program& v);

// Application in the model passes numbers: a non-constant value argument is
// coerced to its code before the substitution. Returns nullptr when the
// value is too degenerate to encode.
Program as_numeral(const Program& v) {
  if (v->kind == ProgKind::Const) return v;
  if (!coercible(v)) return nullptr;
  return make_const(value_to_nat(v));
}

// Recognizes values: constants, abstractions, primitives and prim spines
// still waiting for arguments.
struct Spine {
  bool is_prim_spine = false;
  PrimId prim = PrimId::Succ;
  std::vector<Program> args;
};

bool is_value(const Program& p);

bool spine_of(const Program& p, Spine& out) {
  if (p->kind == ProgKind::Prim) {
    out.is_prim_spine = true;
    out.prim = p->prim;
    return true;
  }
  if (p->kind == ProgKind::App) {
    if (!spine_of(p->fun, out)) return false;
    if (!is_value(p->arg)) return false;
    out.args.push_back(p->arg);
    return true;
  }
  return false;
}

bool is_value(const Program& p) {
  switch (p->kind) {
    case ProgKind::Const: case ProgKind::Lam: case ProgKind::Prim:
      return true;
    case ProgKind::Var:
      return false;
    case ProgKind::App: {
      Spine s;
      if (!spine_of(p, s)) return false;
      return static_cast<int>(s.args.size()) < prim_arity(s.prim);
    }
  }
  return false;
}

Program shift_subst_counted(const Program& p, const Program& v, int depth,
                             std::uint64_t& work) {
  ++work;
  switch (p->kind) {
    case ProgKind::Const: case ProgKind::Prim: return p;
    case ProgKind::Var:
      if (p->index == depth) return v;  // v is closed
      if (p->index > depth) return make_var(p->index - 1);
      return p;
    case ProgKind::App:
      return make_app(shift_subst_counted(p->fun, v, depth, work),
                      shift_subst_counted(p->arg, v, depth, work));
    case ProgKind::Lam:
      return make_lam(shift_subst_counted(p->body, v, depth + 1, work));
  }
  return p;
}

Program shift_subst(const Program& p, const Program& v, int depth) {
  switch (p->kind) {
    case ProgKind::Const: case ProgKind::Prim: return p;
    case ProgKind::Var:
      if (p->index == depth) return v;  // v is closed
      if (p->index > depth) return make_var(p->index - 1);
      return p;
    case ProgKind::App:
      return make_app(shift_subst(p->fun, v, depth), shift_subst(p->arg, v, depth));
    case ProgKind::Lam:
      return make_lam(shift_subst(p->body, v, depth + 1));
  }
  return p;
}

struct Fuel {
  std::uint64_t left;
  std::uint64_t work = 0;
  std::uint64_t work_cap = ~0ull;
  bool spend() {
    if (left == 0) return false;
    --left;
    return true;
  }
  // Large-number arithmetic costs real time per contraction; the meter
  // charges by operand size so degenerate loops stay bounded.
  bool spend_work(std::uint64_t amount) {
    work += amount;
    if (work > work_cap) {
      left = 0;
      return false;
    }
    return true;
  }
};

std::uint64_t op_cost(const Nat& x, const Nat& y) {
  std::uint64_t a = x.bit_length() / 512 + 1;
  std::uint64_t b = y.bit_length() / 512 + 1;
  return a * b;
}

std::uint64_t proj_cost(const Nat& x) {
  std::uint64_t a = x.bit_length() / 128 + 1;
  return a * a;
}

std::optional<Trace> trace_run(const Program& start, Fuel& fuel, bool record);

// Contracts a saturated primitive application. Returns nullptr to signal
// divergence (the machine sticks and burns the rest of its fuel).
Program contract_prim(PrimId prim, const std::vector<Program>& args, Fuel& fuel) {
  for (const Program& a : args) {
    if (!coercible(a)) {
      fuel.left = 0;  // degenerate operand: treat the application as undefined
      return nullptr;
    }
    std::uint64_t cb = code_bits(a, kMaxValueBits + 64) / 512 + 1;
    if (!fuel.spend_work(cb * cb)) return nullptr;
  }
  switch (prim) {
    case PrimId::Succ: {
      Nat v = value_to_nat(args[0]);
      ++v;
      return make_const(std::move(v));
    }
    case PrimId::Pair: {
      Nat x = value_to_nat(args[0]), y = value_to_nat(args[1]);
      if (!fuel.spend_work(op_cost(x, y))) return nullptr;
      return make_const(pair(x, y));
    }
    case PrimId::P1: {
      Nat x = value_to_nat(args[0]);
      if (!fuel.spend_work(proj_cost(x))) return nullptr;
      return make_const(proj1(x));
    }
    case PrimId::P2: {
      Nat x = value_to_nat(args[0]);
      if (!fuel.spend_work(proj_cost(x))) return nullptr;
      return make_const(proj2(x));
    }
    case PrimId::Ite:
      return as_numeral(value_to_nat(args[0]).is_zero() ? args[1] : args[2]);
    case PrimId::Cnc: {
      Nat x = value_to_nat(args[0]), y = value_to_nat(args[1]);
      if (!fuel.spend_work(op_cost(x, y))) return nullptr;
      return make_const(list_cnc(x, y));
    }
    case PrimId::Rec: {
      Nat k = value_to_nat(args[2]);
      if (k.is_zero()) return as_numeral(args[0]);
      Nat pred = k - Nat(1);
      Program rec_call = make_apps(
          make_prim(PrimId::Rec), {args[0], args[1], make_const(pred)});
      return make_app(make_app(args[1], make_const(std::move(pred))), rec_call);
    }
    case PrimId::ListRec: {
      Nat l = value_to_nat(args[2]);
      if (l.is_zero()) return as_numeral(args[0]);
      auto [k, x] = unpair(l - Nat(1));
      Program rec_call = make_apps(
          make_prim(PrimId::ListRec), {args[0], args[1], make_const(k)});
      return make_apps(args[1], {make_const(k), make_const(x), rec_call});
    }
    case PrimId::Lh: {
      Nat n = value_to_nat(args[0]);
      if (!fuel.spend_work(proj_cost(n))) return nullptr;
      return make_const(list_lh(n));
    }
    case PrimId::Comp: {
      Nat n = value_to_nat(args[0]), j = value_to_nat(args[1]);
      if (!fuel.spend_work(proj_cost(n))) return nullptr;
      if (!(j < list_lh(n))) return nullptr;  // out of range: undefined
      return make_const(list_component(n, j));
    }
    case PrimId::TraceOf: {
      Nat e = value_to_nat(args[0]), x = value_to_nat(args[1]);
      Program start = make_app(decode(e), make_const(x));
      auto tr = trace_run(start, fuel, true);
      if (!tr) return nullptr;
      return make_const(tr->code());
    }
  }
  return nullptr;
}

// One contraction of the leftmost-innermost redex. pre: p closed, not a value.
// Returns nullptr on an undefined primitive application.
Program step_once(const Program& p, Fuel& fuel) {
  if (p->kind != ProgKind::App) return nullptr;  // open or stuck
  if (!is_value(p->fun)) {
    Program f = step_once(p->fun, fuel);
    return f ? make_app(f, p->arg) : nullptr;
  }
  if (!is_value(p->arg)) {
    Program a = step_once(p->arg, fuel);
    return a ? make_app(p->fun, a) : nullptr;
  }
  const Program& f = p->fun;
  if (f->kind == ProgKind::Lam) {
    Program num = as_numeral(p->arg);
    if (!num) return nullptr;
    return shift_subst(f->body, num, 0);
  }
  if (f->kind == ProgKind::Const) return make_app(decode(f->value), p->arg);
  Spine s;
  if (spine_of(f, s)) {
    s.args.push_back(p->arg);
    if (static_cast<int>(s.args.size()) == prim_arity(s.prim))
      return contract_prim(s.prim, s.args, fuel);
  }
  return nullptr;
}

std::optional<Trace> trace_run(const Program& start, Fuel& fuel, bool record) {
  if (!is_closed(start)) {
    fuel.left = 0;
    return std::nullopt;
  }
  Trace tr;
  Program cur = start;
  if (record) tr.configs.push_back(encode(cur));
  while (!is_value(cur)) {
    if (!fuel.spend()) return std::nullopt;
    Program next = step_once(cur, fuel);
    if (!next) {  // undefined primitive application: burn out
      fuel.left = 0;
      return std::nullopt;
    }
    cur = std::move(next);
    if (record) tr.configs.push_back(encode(cur));
  }
  tr.output = value_to_nat(cur);
  return tr;
}

// Big-step evaluator performing the same contraction sequence as the
// small-step machine (and charging fuel identically), without the per-step
// walk from the root. Nesting depth is bounded; overruns count as
// divergence independently of fuel, so convergence stays fuel-monotone.
struct Machine {
  Fuel& fuel;
  int depth = 0;
  static constexpr int kMaxDepth = 20000;

  Program eval(Program p) {
    while (true) {
      if (p->kind != ProgKind::App) {
        if (is_value(p)) return p;
        fuel.left = 0;  // open program: stuck forever
        return nullptr;
      }
      if (is_value(p)) return p;  // partial primitive spine
      Program f = p->fun;
      Program a = p->arg;
      if (!is_value(f)) {
        f = eval_sub(std::move(f));
        if (!f) return nullptr;
      }
      if (!is_value(a)) {
        a = eval_sub(std::move(a));
        if (!a) return nullptr;
      }
      if (f->kind == ProgKind::Lam) {
        if (!fuel.spend()) return nullptr;
        Program num = as_numeral(a);
        if (!num) {
          fuel.left = 0;
          return nullptr;
        }
        if (a->kind != ProgKind::Const) {
          std::uint64_t cb = num->value.bit_length() / 512 + 1;
          if (!fuel.spend_work(cb * cb)) return nullptr;
        }
        std::uint64_t visited = 0;
        p = shift_subst_counted(f->body, num, 0, visited);
        if (!fuel.spend_work(visited)) return nullptr;
        continue;
      }
      if (f->kind == ProgKind::Const) {
        if (!fuel.spend()) return nullptr;
        p = make_app(decode(f->value), a);
        continue;
      }
      Spine s;
      if (spine_of(f, s)) {
        s.args.push_back(a);
        if (static_cast<int>(s.args.size()) == prim_arity(s.prim)) {
          if (!fuel.spend()) return nullptr;
          Program r = contract_prim(s.prim, s.args, fuel);
          if (!r) {
            fuel.left = 0;
            return nullptr;
          }
          p = std::move(r);
          continue;
        }
        return make_app(std::move(f), std::move(a));  // still a value
      }
      fuel.left = 0;  // not callable: stuck
      return nullptr;
    }
  }

  Program eval_sub(Program p) {
    if (++depth > kMaxDepth) {
      fuel.left = 0;
      return nullptr;
    }
    Program r = eval(std::move(p));
    --depth;
    return r;
  }
};

EvalResult run_impl(const Program& p, std::uint64_t fuel_in) {
  Fuel fuel{fuel_in};
  std::uint64_t before = fuel.left;
  EvalResult res;
  if (!is_closed(p)) {
    res.fuel_left = 0;
    return res;
  }
  fuel.work_cap = 64 * fuel_in + 4096;
  Machine m{fuel};
  Program v = m.eval(p);
  res.fuel_left = fuel.left;
  if (v) {
    res.converged = true;
    res.value = value_to_nat(v);
    res.steps = Nat(before - fuel.left);
  }
  return res;
}

}  // namespace

EvalResult run(const Program& p, std::uint64_t fuel) { return run_impl(p, fuel); }

EvalResult apply(const Nat& e, const Nat& x, std::uint64_t fuel) {
  return run_impl(make_app(decode(e), make_const(x)), fuel);
}

EvalResult apply_many(const Nat& e, const std::vector<Nat>& args, std::uint64_t fuel) {
  Program p = decode(e);
  for (const Nat& a : args) p = make_app(p, make_const(a));
  return run_impl(p, fuel);
}

std::optional<Nat> apply_cached(const Nat& e, const Nat& x, std::uint64_t fuel) {
  struct Entry {
    bool converged;
    Nat value;
    std::uint64_t fuel_tried;
  };
  struct KeyHash {
    std::size_t operator()(const std::pair<Nat, Nat>& k) const {
      return k.first.hash() * 1099511628211ull ^ k.second.hash();
    }
  };
  thread_local std::unordered_map<std::pair<Nat, Nat>, Entry, KeyHash> cache;
  auto key = std::make_pair(e, x);
  auto it = cache.find(key);
  if (it != cache.end()) {
    if (it->second.converged) return it->second.value;
    if (fuel <= it->second.fuel_tried) return std::nullopt;
  }
  EvalResult r = apply(e, x, fuel);
  if (cache.size() > 200000) cache.clear();
  Entry ent{r.converged, r.value, fuel};
  cache[key] = ent;
  if (!r.converged) return std::nullopt;
  return r.value;
}

Nat lam(const Program& body) {
  if (max_free_index(body, 0) > 0)
    throw std::invalid_argument("lam: body has undeclared free variables");
  return encode(make_lam(body));
}

Program substitute_outer(const Program& body, const Program& closed_value) {
  return shift_subst(body, closed_value, 0);
}

EvalResult rec_apply(const Nat& n, const Nat& m, const Nat& k, std::uint64_t fuel) {
  return run_impl(make_apps(make_prim(PrimId::Rec),
                            {make_const(n), make_const(m), make_const(k)}),
                  fuel);
}

EvalResult listrec_apply(const Nat& n, const Nat& m, const Nat& l, std::uint64_t fuel) {
  return run_impl(make_apps(make_prim(PrimId::ListRec),
                            {make_const(n), make_const(m), make_const(l)}),
                  fuel);
}

// ---------------------------------------------------------------------------
// Lists

Nat list_empty() { return Nat(); }

Nat list_cnc(const Nat& k, const Nat& x) { return pair(k, x) + Nat(1); }

Nat list_lh(const Nat& n) {
  Nat cur = n, len;
  while (!cur.is_zero()) {
    cur = proj1(cur - Nat(1));
    ++len;
  }
  return len;
}

Nat list_component(const Nat& n, const Nat& j) {
  Nat lh = list_lh(n);
  if (!(j < lh)) throw std::out_of_range("list_component: index past list length");
  Nat cur = n;
  Nat back = lh - j - Nat(1);
  while (!back.is_zero()) {
    cur = proj1(cur - Nat(1));
    back -= Nat(1);
  }
  return proj2(cur - Nat(1));
}

std::vector<Nat> list_elements(const Nat& n) {
  std::vector<Nat> rev;
  Nat cur = n;
  while (!cur.is_zero()) {
    auto [k, x] = unpair(cur - Nat(1));
    rev.push_back(std::move(x));
    cur = std::move(k);
  }
  return {rev.rbegin(), rev.rend()};
}

Nat list_of(const std::vector<Nat>& xs) {
  Nat l;
  for (const Nat& x : xs) l = list_cnc(l, x);
  return l;
}

// ---------------------------------------------------------------------------
// Traces and Kleene T / U

Nat Trace::code() const { return list_of(configs); }

std::optional<Trace> trace_of(const Nat& e, const Nat& x, std::uint64_t fuel) {
  Fuel f{fuel};
  f.work_cap = 64 * fuel + 4096;
  return trace_run(make_app(decode(e), make_const(x)), f, true);
}

bool kleene_T(const Nat& e, const Nat& x, const Nat& u, std::uint64_t fuel) {
  std::vector<Nat> configs = list_elements(u);
  if (configs.empty()) return false;
  Nat expected_first = encode(make_app(decode(e), make_const(x)));
  if (!(configs.front() == expected_first)) return false;
  Fuel f{fuel};
  f.work_cap = 64 * fuel + 4096;
  for (std::size_t i = 0; i + 1 < configs.size(); ++i) {
    Program cur = decode(configs[i]);
    if (is_value(cur) || !is_closed(cur)) return false;
    if (!f.spend()) return false;
    Program next = step_once(cur, f);
    if (!next) return false;
    if (!(encode(next) == configs[i + 1])) return false;
  }
  return is_value(decode(configs.back()));
}

Nat kleene_U(const Nat& u) {
  std::vector<Nat> configs = list_elements(u);
  if (configs.empty()) return Nat();
  return value_to_nat(decode(configs.back()));
}

Nat code_of_prim(PrimId p) { return encode(make_prim(p)); }

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_prog(const Program& p, std::vector<std::string>& scope,
                const std::vector<std::string>& names, int& fresh, std::string& out) {
  switch (p->kind) {
    case ProgKind::Const:
      out += p->value.to_string();
      return;
    case ProgKind::Var: {
      int i = p->index;
      if (i >= 0 && i < static_cast<int>(scope.size()))
        out += scope[scope.size() - 1 - i];
      else
        out += "?" + std::to_string(i);
      return;
    }
    case ProgKind::Prim:
      out += prim_name(p->prim);
      return;
    case ProgKind::Lam: {
      std::string name = scope.size() < names.size()
                             ? names[scope.size()]
                             : "v" + std::to_string(fresh++);
      out += "L" + name + ".";
      scope.push_back(name);
      print_prog(p->body, scope, names, fresh, out);
      scope.pop_back();
      return;
    }
    case ProgKind::App: {
      std::vector<const ProgramNode*> args;
      const ProgramNode* head = p.get();
      while (head->kind == ProgKind::App) {
        args.push_back(head->arg.get());
        head = head->fun.get();
      }
      out += "{";
      Program head_sp(p, head);  // aliasing shared_ptr
      print_prog(head_sp, scope, names, fresh, out);
      out += "}(";
      for (std::size_t i = args.size(); i-- > 0;) {
        Program arg_sp(p, args[i]);
        print_prog(arg_sp, scope, names, fresh, out);
        if (i > 0) out += ",";
      }
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string to_string(const Program& p, const std::vector<std::string>& names) {
  std::string out;
  std::vector<std::string> scope;
  int fresh = 0;
  print_prog(p, scope, names, fresh, out);
  return out;
}

}  // namespace mtt::pca

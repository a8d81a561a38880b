#include "mtt/principles.hpp"

#include <functional>

#include "mtt/interp.hpp"
#include "mtt/pca.hpp"
#include "mtt/setcodes.hpp"

namespace mtt::principles {

using pca::make_app;
using pca::make_apps;
using pca::make_const;
using pca::make_lam;
using pca::make_prim;
using pca::make_var;
using pca::PrimId;
using pca::Program;
using syntax::Term;
using syntax::TypeExpr;

// ---------------------------------------------------------------------------
// HA syntax

HaTerm ha_var(std::string name) {
  auto n = std::make_shared<HaTermNode>();
  n->kind = HaTermNode::Var;
  n->name = std::move(name);
  return n;
}

HaTerm ha_zero() {
  auto n = std::make_shared<HaTermNode>();
  n->kind = HaTermNode::Zero;
  return n;
}

HaTerm ha_succ(HaTerm t) {
  auto n = std::make_shared<HaTermNode>();
  n->kind = HaTermNode::Succ;
  n->a = std::move(t);
  return n;
}

HaTerm ha_add(HaTerm a, HaTerm b) {
  auto n = std::make_shared<HaTermNode>();
  n->kind = HaTermNode::Add;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

HaTerm ha_mul(HaTerm a, HaTerm b) {
  auto n = std::make_shared<HaTermNode>();
  n->kind = HaTermNode::Mul;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

HaTerm ha_num(std::uint64_t v) {
  HaTerm t = ha_zero();
  for (std::uint64_t i = 0; i < v; ++i) t = ha_succ(t);
  return t;
}

namespace {
HaFormula mk_formula(HaFormulaNode n) {
  return std::make_shared<HaFormulaNode>(std::move(n));
}
}  // namespace

HaFormula ha_false() { return mk_formula({HaFormulaNode::False, {}, {}, {}, {}, ""}); }
HaFormula ha_eq(HaTerm a, HaTerm b) {
  return mk_formula({HaFormulaNode::Eq, std::move(a), std::move(b), {}, {}, ""});
}
HaFormula ha_and(HaFormula a, HaFormula b) {
  return mk_formula({HaFormulaNode::And, {}, {}, std::move(a), std::move(b), ""});
}
HaFormula ha_or(HaFormula a, HaFormula b) {
  return mk_formula({HaFormulaNode::Or, {}, {}, std::move(a), std::move(b), ""});
}
HaFormula ha_imp(HaFormula a, HaFormula b) {
  return mk_formula({HaFormulaNode::Imp, {}, {}, std::move(a), std::move(b), ""});
}
HaFormula ha_exists(std::string x, HaFormula a) {
  return mk_formula({HaFormulaNode::Exists, {}, {}, std::move(a), {}, std::move(x)});
}
HaFormula ha_forall(std::string x, HaFormula a) {
  return mk_formula({HaFormulaNode::Forall, {}, {}, std::move(a), {}, std::move(x)});
}

std::string to_string(const HaTerm& t) {
  switch (t->kind) {
    case HaTermNode::Var: return t->name;
    case HaTermNode::Zero: return "0";
    case HaTermNode::Succ: return "S(" + to_string(t->a) + ")";
    case HaTermNode::Add: return "(" + to_string(t->a) + " + " + to_string(t->b) + ")";
    case HaTermNode::Mul: return "(" + to_string(t->a) + " * " + to_string(t->b) + ")";
  }
  return "?";
}

std::string to_string(const HaFormula& f) {
  switch (f->kind) {
    case HaFormulaNode::False: return "false";
    case HaFormulaNode::Eq: return to_string(f->t1) + " = " + to_string(f->t2);
    case HaFormulaNode::And: return "(" + to_string(f->a) + " & " + to_string(f->b) + ")";
    case HaFormulaNode::Or: return "(" + to_string(f->a) + " | " + to_string(f->b) + ")";
    case HaFormulaNode::Imp: return "(" + to_string(f->a) + " -> " + to_string(f->b) + ")";
    case HaFormulaNode::Exists: return "E " + f->bound + ". " + to_string(f->a);
    case HaFormulaNode::Forall: return "A " + f->bound + ". " + to_string(f->a);
  }
  return "?";
}

Nat ha_eval(const HaTerm& t, const HaEnv& env) {
  switch (t->kind) {
    case HaTermNode::Var: {
      auto it = env.find(t->name);
      if (it == env.end())
        throw std::invalid_argument("ha_eval: unbound variable " + t->name);
      return it->second;
    }
    case HaTermNode::Zero: return Nat(0);
    case HaTermNode::Succ: {
      Nat v = ha_eval(t->a, env);
      ++v;
      return v;
    }
    case HaTermNode::Add: return ha_eval(t->a, env) + ha_eval(t->b, env);
    case HaTermNode::Mul: return ha_eval(t->a, env) * ha_eval(t->b, env);
  }
  return Nat(0);
}

Verdict ha_truth(const HaFormula& f, const HaEnv& env, const Budget& b) {
  if (b.depth == 0) return Verdict::maybe(Why::Depth);
  Budget b2 = b.shallower();
  switch (f->kind) {
    case HaFormulaNode::False: return Verdict::no();
    case HaFormulaNode::Eq:
      return ha_eval(f->t1, env) == ha_eval(f->t2, env) ? Verdict::yes() : Verdict::no();
    case HaFormulaNode::And: return v_and(ha_truth(f->a, env, b2), ha_truth(f->b, env, b2));
    case HaFormulaNode::Or: return v_or(ha_truth(f->a, env, b2), ha_truth(f->b, env, b2));
    case HaFormulaNode::Imp:
      return v_or(v_not(ha_truth(f->a, env, b2)), ha_truth(f->b, env, b2));
    case HaFormulaNode::Exists: {
      for (std::uint64_t i = 0; i <= b.enum_bound; ++i) {
        HaEnv e2 = env;
        e2.insert_or_assign(f->bound, Nat(i));
        Verdict v = ha_truth(f->a, e2, b2);
        if (v.holds()) return v;
      }
      return Verdict::maybe(Why::EnumBound);
    }
    case HaFormulaNode::Forall: {
      for (std::uint64_t i = 0; i <= b.enum_bound; ++i) {
        HaEnv e2 = env;
        e2.insert_or_assign(f->bound, Nat(i));
        Verdict v = ha_truth(f->a, e2, b2);
        if (v.fails()) return v;
      }
      return Verdict::maybe(Why::EnumBound);
    }
  }
  return Verdict::maybe(Why::None);
}

Verdict kleene_realizes(const Nat& n, const HaFormula& f, const HaEnv& env,
                        const Budget& b) {
  if (b.depth == 0) return Verdict::maybe(Why::Depth);
  Budget b2 = b.shallower();
  auto app = [&](const Nat& fn, const Nat& x) -> std::optional<Nat> {
    pca::EvalResult r = pca::apply(fn, x, b.fuel);
    if (!r.converged) return std::nullopt;
    return r.value;
  };
  switch (f->kind) {
    case HaFormulaNode::False: return Verdict::no();
    case HaFormulaNode::Eq:
      return ha_eval(f->t1, env) == ha_eval(f->t2, env) ? Verdict::yes() : Verdict::no();
    case HaFormulaNode::And: {
      auto [p1, p2] = pca::unpair(n);
      return v_and(kleene_realizes(p1, f->a, env, b2),
                   kleene_realizes(p2, f->b, env, b2));
    }
    case HaFormulaNode::Or: {
      auto [p1, p2] = pca::unpair(n);
      if (p1.is_zero()) return kleene_realizes(p2, f->a, env, b2);
      return kleene_realizes(p2, f->b, env, b2);
    }
    case HaFormulaNode::Imp: {
      // A t (t IIk a -> {n}(t) IIk b). If the antecedent is decidably false
      // the implication is vacuous.
      Verdict at = ha_truth(f->a, env, b2);
      if (at.fails()) return Verdict::yes();
      for (std::uint64_t i = 0; i <= b.enum_bound; ++i) {
        Nat t(i);
        Verdict guard = kleene_realizes(t, f->a, env, b2);
        if (!guard.holds()) continue;
        auto nt = app(n, t);
        Verdict body = nt ? kleene_realizes(*nt, f->b, env, b2)
                          : Verdict::maybe(Why::Fuel);
        Verdict inst = v_or(v_not(guard), body);
        if (inst.fails()) return inst;
        if (inst.unknown()) return Verdict::maybe(inst.why);
      }
      return Verdict::maybe(Why::EnumBound);
    }
    case HaFormulaNode::Exists: {
      auto [p1, p2] = pca::unpair(n);
      HaEnv e2 = env;
      e2.insert_or_assign(f->bound, p1);
      return kleene_realizes(p2, f->a, e2, b2);
    }
    case HaFormulaNode::Forall: {
      for (std::uint64_t i = 0; i <= b.enum_bound; ++i) {
        Nat x(i);
        auto nx = app(n, x);
        if (!nx) return Verdict::maybe(Why::Fuel);
        HaEnv e2 = env;
        e2.insert_or_assign(f->bound, x);
        Verdict inst = kleene_realizes(*nx, f->a, e2, b2);
        if (inst.fails()) return inst;
      }
      return Verdict::maybe(Why::EnumBound);
    }
  }
  return Verdict::maybe(Why::None);
}

// ---------------------------------------------------------------------------
// Embedding

Term embed_ha_term(const HaTerm& t) {
  using syntax::Branch;
  using syntax::t_node;
  using syntax::TermKind;
  switch (t->kind) {
    case HaTermNode::Var: return syntax::t_var(t->name);
    case HaTermNode::Zero: return syntax::t_leaf(TermKind::Zero);
    case HaTermNode::Succ: return t_node(TermKind::Succ, {embed_ha_term(t->a)});
    case HaTermNode::Add:
      // a + b by recursion on b.
      return t_node(TermKind::ElN, {embed_ha_term(t->b), embed_ha_term(t->a)},
                    {Branch{{"y", "z"},
                            t_node(TermKind::Succ, {syntax::t_var("z")})}});
    case HaTermNode::Mul: {
      Term add_a_z = t_node(
          TermKind::ElN, {syntax::t_var("z"), embed_ha_term(t->a)},
          {Branch{{"y2", "z2"}, t_node(TermKind::Succ, {syntax::t_var("z2")})}});
      return t_node(TermKind::ElN, {embed_ha_term(t->b), syntax::t_leaf(TermKind::Zero)},
                    {Branch{{"y", "z"}, add_a_z}});
    }
  }
  return syntax::t_leaf(syntax::TermKind::Zero);
}

TypeExpr embed_ha(const HaFormula& f) {
  using syntax::ty_bin;
  using syntax::TypeKind;
  switch (f->kind) {
    case HaFormulaNode::False: return syntax::ty_leaf(TypeKind::Bot);
    case HaFormulaNode::Eq:
      return syntax::ty_id(syntax::ty_leaf(TypeKind::N), embed_ha_term(f->t1),
                           embed_ha_term(f->t2));
    case HaFormulaNode::And:
      return ty_bin(TypeKind::And, embed_ha(f->a), embed_ha(f->b));
    case HaFormulaNode::Or:
      return ty_bin(TypeKind::Or, embed_ha(f->a), embed_ha(f->b));
    case HaFormulaNode::Imp:
      return ty_bin(TypeKind::Imp, embed_ha(f->a), embed_ha(f->b));
    case HaFormulaNode::Exists:
      return syntax::ty_binder(TypeKind::Exists, f->bound,
                               syntax::ty_leaf(TypeKind::N), embed_ha(f->a));
    case HaFormulaNode::Forall:
      return syntax::ty_binder(TypeKind::Forall, f->bound,
                               syntax::ty_leaf(TypeKind::N), embed_ha(f->a));
  }
  return syntax::ty_leaf(TypeKind::Bot);
}

// ---------------------------------------------------------------------------
// Realizer programs

namespace {

Program prim(PrimId p) { return make_prim(p); }

Program papp(Program a, Program b) { return make_app(std::move(a), std::move(b)); }

Program ppair(Program a, Program b) {
  return make_apps(prim(PrimId::Pair), {std::move(a), std::move(b)});
}

Program p1_of(Program a) { return papp(prim(PrimId::P1), std::move(a)); }
Program p2_of(Program a) { return papp(prim(PrimId::P2), std::move(a)); }

// La.Lb.<trace(a,b), 0>: the canonical witness builder for Kleene's T.
Program trace_pair_program() {
  Program tr = make_apps(prim(PrimId::TraceOf), {make_var(1), make_var(0)});
  return make_lam(make_lam(ppair(std::move(tr), make_const(0))));
}

}  // namespace

Nat extfun_realizer() {
  return pca::encode(make_lam(make_lam(make_lam(make_const(0)))));
}

Nat ac_realizer() {
  // Lr.<Ln.p1({r}(n)), Ln.p2({r}(n))>; inside each inner lambda r is Var 1.
  Program fst = make_lam(p1_of(papp(make_var(1), make_var(0))));
  Program snd = make_lam(p2_of(papp(make_var(1), make_var(0))));
  return pca::encode(make_lam(ppair(std::move(fst), std::move(snd))));
}

Nat ac_unique_realizer() {
  // Premise realizers now carry <<witness, proof>, uniqueness> per point.
  Program fst = make_lam(p1_of(p1_of(papp(make_var(1), make_var(0)))));
  Program snd = make_lam(p2_of(p1_of(papp(make_var(1), make_var(0)))));
  return pca::encode(make_lam(ppair(std::move(fst), std::move(snd))));
}

Nat ct_lambda_realizer() {
  // Lf.<f, Lx.<p1({r}(f,x)), <p2({r}(f,x)), 0>>> with r the trace builder.
  Program r = trace_pair_program();
  auto rfx = [&] { return make_apps(r, {make_var(1), make_var(0)}); };
  Program witness = make_lam(
      ppair(p1_of(rfx()), ppair(p2_of(rfx()), make_const(0))));
  return pca::encode(make_lam(ppair(make_var(0), std::move(witness))));
}

Nat ct_realizer() {
  // Lr.<F, Lx.<p1({rr}(F,x)), <p2({rr}(F,x)), p2({r}(x))>>>
  // where F = Ln.p1({r}(n)) is the choice function from AC_{N,N}.
  Program rr = trace_pair_program();
  auto choice = [&](int r_index) {
    return make_lam(p1_of(papp(make_var(r_index + 1), make_var(0))));
  };
  auto rrfx = [&] { return make_apps(rr, {choice(1), make_var(0)}); };
  Program proof_part = p2_of(papp(make_var(1), make_var(0)));
  Program witness = make_lam(
      ppair(p1_of(rrfx()), ppair(p2_of(rrfx()), std::move(proof_part))));
  return pca::encode(make_lam(ppair(choice(0), std::move(witness))));
}

// ---------------------------------------------------------------------------
// Validation matrices

bool MatrixReport::all_holds() const {
  for (const auto& r : rows)
    if (!r.verdict.holds()) return false;
  return true;
}

bool CtReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.extracted_agrees || !r.witnesses_pass) return false;
  return true;
}

namespace {

using realizability::SemEnv;

TypeExpr ty(syntax::TypeKind k) { return syntax::ty_leaf(k); }

TypeExpr pi_type(const std::string& x, TypeExpr a, TypeExpr b) {
  return syntax::ty_binder(syntax::TypeKind::Pi, x, std::move(a), std::move(b));
}

// Candidate members of Pi(A,B) used to drive the instance matrices.
std::vector<Nat> function_candidates(const TypeExpr& cod) {
  std::vector<Nat> out;
  out.push_back(pca::encode(make_lam(make_var(0))));                        // identity
  out.push_back(pca::encode(make_lam(make_const(0))));                      // const 0
  out.push_back(pca::encode(make_lam(make_const(1))));                      // const 1
  out.push_back(pca::encode(make_lam(make_const(2))));                      // const 2
  out.push_back(pca::code_of_prim(PrimId::Succ));                          // successor
  out.push_back(pca::encode(make_lam(papp(prim(PrimId::Succ), make_var(0)))));
  out.push_back(pca::encode(make_lam(p1_of(ppair(make_var(0), make_const(7))))));
  (void)cod;
  return out;
}

Verdict decide_pointwise_equal(const Nat& f, const Nat& g, const TypeExpr& dom,
                               const TypeExpr& cod, const SemEnv& env,
                               const Budget& b) {
  realizability::Carrier c = realizability::classify_carrier(dom, env, b);
  if (c.kind == realizability::Carrier::Empty) return Verdict::yes();
  if (c.kind != realizability::Carrier::Finite) return Verdict::maybe(Why::NonEnumerable);
  Verdict acc = Verdict::yes(0);
  for (const Nat& x : c.elems) {
    pca::EvalResult fx = pca::apply(f, x, b.fuel);
    pca::EvalResult gx = pca::apply(g, x, b.fuel);
    if (!fx.converged || !gx.converged) return Verdict::maybe(Why::Fuel);
    acc = v_and(acc, realizability::equiv(fx.value, gx.value, cod, env, b));
  }
  return acc;
}

}  // namespace

MatrixReport validate_extfun(const Budget& b) {
  MatrixReport rep;
  Nat big_r = extfun_realizer();
  struct Inst { const char* name; TypeExpr a, bb; };
  std::vector<Inst> insts = {
      {"A=N0,B=N", ty(syntax::TypeKind::N0), ty(syntax::TypeKind::N)},
      {"A=N1,B=N1", ty(syntax::TypeKind::N1), ty(syntax::TypeKind::N1)},
      {"A=N1,B=N", ty(syntax::TypeKind::N1), ty(syntax::TypeKind::N)},
      {"A=N1+N1,B=N1",
       syntax::ty_bin(syntax::TypeKind::Plus, ty(syntax::TypeKind::N1),
                      ty(syntax::TypeKind::N1)),
       ty(syntax::TypeKind::N1)},
  };
  SemEnv env;
  for (const auto& inst : insts) {
    TypeExpr pi = pi_type("x", inst.a, inst.bb);
    Verdict acc = Verdict::yes(0);
    std::string note;
    int decided_pairs = 0;
    for (const Nat& f : function_candidates(inst.bb)) {
      if (!realizability::member(f, pi, env, b).holds()) continue;
      for (const Nat& g : function_candidates(inst.bb)) {
        if (!realizability::member(g, pi, env, b).holds()) continue;
        Verdict premise = decide_pointwise_equal(f, g, inst.a, inst.bb, env, b);
        if (!premise.decided()) continue;
        ++decided_pairs;
        if (premise.fails()) continue;  // vacuous instance
        // The realizer yields 0; 0 realizes Id(Pi, f, g) iff f ~ g.
        pca::EvalResult r0 =
            pca::apply_many(big_r, {f, g, Nat(0)}, b.fuel);
        Verdict app_ok =
            r0.converged && r0.value.is_zero() ? Verdict::yes() : Verdict::no();
        Verdict concl = realizability::equiv(f, g, pi, env, b);
        acc = v_and(acc, v_and(app_ok, concl));
      }
    }
    if (decided_pairs == 0 && inst.a->kind != syntax::TypeKind::N0)
      acc = Verdict::maybe(Why::EnumBound);
    note = std::to_string(decided_pairs) + " decided pairs";
    rep.rows.push_back({inst.name, acc, note});
  }
  return rep;
}

namespace {

// Builds a premise realizer program for AC over N: Lx.<w(x), 0> given a
// witness function expressed as a small program.
Nat ac_premise_identity_witness() {
  return pca::encode(make_lam(ppair(make_var(0), make_const(0))));
}

Nat ac_premise_const_witness(std::uint64_t w) {
  return pca::encode(make_lam(ppair(make_const(w), make_const(0))));
}

}  // namespace

MatrixReport validate_ac(const Budget& b) {
  MatrixReport rep;
  Nat big_r = ac_realizer();
  SemEnv env;
  TypeExpr n_ty = ty(syntax::TypeKind::N);

  // rho(x,y) := Id(N,x,y); premise realizer picks y = x.
  {
    Nat r = ac_premise_identity_witness();
    pca::EvalResult res = pca::apply(big_r, r, b.fuel);
    Verdict acc = res.converged ? Verdict::yes() : Verdict::maybe(Why::Fuel);
    if (res.converged) {
      Nat f = pca::proj1(res.value);
      Nat w = pca::proj2(res.value);
      TypeExpr rho = syntax::ty_id(n_ty, syntax::t_var("x"), syntax::t_var("y"));
      for (std::uint64_t i = 0; i <= 10; ++i) {
        pca::EvalResult fx = pca::apply(f, Nat(i), b.fuel);
        pca::EvalResult wx = pca::apply(w, Nat(i), b.fuel);
        if (!fx.converged || !wx.converged) {
          acc = v_and(acc, Verdict::maybe(Why::Fuel));
          break;
        }
        acc = v_and(acc, fx.value == Nat(i) ? Verdict::yes() : Verdict::no());
        SemEnv e2;
        e2.emplace("x", Nat(i));
        e2.emplace("y", fx.value);
        acc = v_and(acc, realizability::realizes(wx.value, rho, e2, b));
      }
    }
    rep.rows.push_back({"B=N, rho=Id(N,x,y)", acc, "choice is the identity"});
  }

  // rho(x,y) := Id(N1,y,y) over B=N1; constant witness 0.
  {
    Nat r = ac_premise_const_witness(0);
    pca::EvalResult res = pca::apply(big_r, r, b.fuel);
    Verdict acc = res.converged ? Verdict::yes() : Verdict::maybe(Why::Fuel);
    if (res.converged) {
      Nat f = pca::proj1(res.value);
      for (std::uint64_t i = 0; i <= 10; ++i) {
        pca::EvalResult fx = pca::apply(f, Nat(i), b.fuel);
        if (!fx.converged) {
          acc = v_and(acc, Verdict::maybe(Why::Fuel));
          break;
        }
        acc = v_and(acc, realizability::member(fx.value, ty(syntax::TypeKind::N1),
                                               env, b));
      }
    }
    rep.rows.push_back({"B=N1, rho=Id(N1,y,y)", acc, "constant choice into N1"});
  }

  // Degenerate premise: rho = Bot. No realizer of the premise exists, so the
  // implication holds vacuously; sampled candidates all fail to realize it.
  {
    TypeExpr premise = syntax::ty_binder(
        syntax::TypeKind::Forall, "x", n_ty,
        syntax::ty_binder(syntax::TypeKind::Exists, "y", n_ty,
                          ty(syntax::TypeKind::Bot)));
    // Candidates either fail outright or hit the fuel bound on divergent
    // applications; none is ever accepted, which is all the vacuous case
    // can show at a finite budget.
    Verdict none_accepted = Verdict::yes(0);
    for (std::uint64_t i = 0; i <= 8; ++i) {
      Verdict v = realizability::realizes(Nat(i), premise, env, b);
      if (v.holds()) none_accepted = Verdict::no();
    }
    rep.rows.push_back({"rho=Bot (vacuous)", none_accepted,
                        "no sampled realizer of the premise"});
  }
  return rep;
}

Verdict ac_unique_check(const AcUniqueInstance& inst, const Budget& b) {
  SemEnv env;
  realizability::Carrier dom = realizability::classify_carrier(inst.domain, env, b);
  if (dom.kind == realizability::Carrier::Opaque)
    return Verdict::maybe(Why::NonEnumerable);
  if (dom.kind == realizability::Carrier::Empty) return Verdict::yes();
  if (dom.kind != realizability::Carrier::Finite)
    return Verdict::maybe(Why::NonEnumerable);

  realizability::Carrier cod = realizability::classify_carrier(inst.codomain, env, b);
  std::vector<Nat> cod_pool = cod.elems;
  if (!cod.complete())
    for (std::uint64_t i = 0; i <= std::min<std::uint64_t>(b.enum_bound, 16); ++i)
      cod_pool.push_back(Nat(i));

  // Per member x: find the unique witness y with some realizer of rho(x,y).
  struct Point { Nat x, y, proof; };
  std::vector<Point> points;
  for (const Nat& x : dom.elems) {
    std::optional<Point> found;
    for (const Nat& y : cod_pool) {
      SemEnv e2 = env;
      e2.insert_or_assign("x", x);
      e2.insert_or_assign("y", y);
      for (std::uint64_t w = 0; w <= 4; ++w) {
        Verdict v = realizability::realizes(Nat(w), inst.rho, e2, b);
        if (v.holds()) {
          found = Point{x, y, Nat(w)};
          break;
        }
        if (v.unknown()) return Verdict::maybe(v.why);
      }
      if (found) break;
    }
    if (!found) return Verdict::yes();  // premise unrealizable here: vacuous
    points.push_back(*found);
  }
  if (points.size() > 2) return Verdict::maybe(Why::NonEnumerable);

  // Assemble the premise realizer r and run the published program on it.
  // Finite domains here have at most two members, with 0 always first.
  Program per_point;
  if (points.size() == 1) {
    per_point = ppair(ppair(make_const(points[0].y), make_const(points[0].proof)),
                      make_lam(make_lam(make_lam(make_const(0)))));
  } else {
    Program alt0 = ppair(ppair(make_const(points[0].y), make_const(points[0].proof)),
                         make_lam(make_lam(make_lam(make_const(0)))));
    Program alt1 = ppair(ppair(make_const(points[1].y), make_const(points[1].proof)),
                         make_lam(make_lam(make_lam(make_const(0)))));
    per_point = make_apps(prim(PrimId::Ite), {make_var(0), alt0, alt1});
  }
  Nat r = pca::encode(make_lam(per_point));
  pca::EvalResult res = pca::apply(ac_unique_realizer(), r, b.fuel);
  if (!res.converged) return Verdict::maybe(Why::Fuel);
  Nat f = pca::proj1(res.value);
  Nat w = pca::proj2(res.value);

  Verdict acc = Verdict::yes(0);
  for (const auto& pt : points) {
    pca::EvalResult fx = pca::apply(f, pt.x, b.fuel);
    pca::EvalResult wx = pca::apply(w, pt.x, b.fuel);
    if (!fx.converged || !wx.converged) return Verdict::maybe(Why::Fuel);
    acc = v_and(acc, realizability::member(fx.value, inst.codomain, env, b));
    SemEnv e2 = env;
    e2.insert_or_assign("x", pt.x);
    e2.insert_or_assign("y", fx.value);
    acc = v_and(acc, realizability::realizes(wx.value, inst.rho, e2, b));
  }
  return acc;
}

MatrixReport validate_ac_unique(const Budget& b) {
  MatrixReport rep;
  TypeExpr n_ty = ty(syntax::TypeKind::N);
  TypeExpr n1_ty = ty(syntax::TypeKind::N1);
  {
    AcUniqueInstance inst{n1_ty, n_ty,
                          syntax::ty_id(n_ty, syntax::t_var("y"),
                                        syntax::t_leaf(syntax::TermKind::Zero))};
    rep.rows.push_back({"A=N1,B=N,rho=Id(N,y,0)", ac_unique_check(inst, b),
                        "unique witness 0"});
  }
  {
    AcUniqueInstance inst{n1_ty, n_ty, ty(syntax::TypeKind::Bot)};
    rep.rows.push_back({"A=N1,B=N,rho=Bot", ac_unique_check(inst, b), "vacuous"});
  }
  {
    AcUniqueInstance inst{
        syntax::ty_bin(syntax::TypeKind::Plus, n1_ty, n1_ty), n1_ty,
        syntax::ty_id(n1_ty, syntax::t_var("y"), syntax::t_var("y"))};
    rep.rows.push_back({"A=N1+N1,B=N1", ac_unique_check(inst, b),
                        "finite exhaustive"});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Church thesis

const std::vector<CtFunction>& ct_function_corpus() {
  static const std::vector<CtFunction> fns = [] {
    auto parse = [](const char* s) { return syntax::parse_term(s); };
    std::vector<CtFunction> v;
    // Keep the machine runs short: the list coding of traces doubles in
    // size per recorded step, so long runs have astronomically large
    // witness codes.
    v.push_back({"identity", parse("lam y. y")});
    v.push_back({"successor", parse("lam y. succ(y)")});
    v.push_back({"plus-two", parse("lam y. succ(succ(y))")});
    v.push_back({"const-0", parse("lam y. 0")});
    v.push_back({"const-2", parse("lam y. succ(succ(0))")});
    v.push_back({"first-of-pair", parse("lam y. pi1And(pairAnd(y, 0))")});
    v.push_back({"second-of-pair", parse("lam y. pi2And(pairAnd(0, succ(y)))")});
    v.push_back({"singleton-elim", parse("lam y. elN1(star, y)")});
    v.push_back({"beta-redex", parse("lam y. ap(lam z. succ(z), y)")});
    v.push_back({"projection-chain", parse("lam y. pi1And(pairAnd(succ(y), y))")});
    return v;
  }();
  return fns;
}

CtReport validate_ct_lambda(const Budget& b, std::uint64_t max_x) {
  CtReport rep;
  Nat big_r = ct_lambda_realizer();
  for (const auto& fn : ct_function_corpus()) {
    CtRow row;
    row.name = fn.name;
    pca::Program fp = interp::interpret(fn.term);
    pca::EvalResult fv = pca::run(fp, b.fuel);
    if (!fv.converged) {
      rep.rows.push_back(row);
      continue;
    }
    pca::EvalResult applied = pca::apply(big_r, fv.value, b.fuel);
    if (!applied.converged) {
      rep.rows.push_back(row);
      continue;
    }
    Nat e = pca::proj1(applied.value);
    Nat w = pca::proj2(applied.value);
    bool agrees = true, witnesses = true;
    for (std::uint64_t x = 0; x <= max_x; ++x) {
      ++row.samples;
      // I(Ap(f, x)) evaluated directly.
      pca::EvalResult direct =
          pca::run(make_app(fp, make_const(x)), b.fuel);
      pca::EvalResult via_e = pca::apply(e, Nat(x), b.fuel);
      if (!direct.converged || !via_e.converged ||
          !(direct.value == via_e.value)) {
        agrees = false;
        break;
      }
      pca::EvalResult wx = pca::apply(w, Nat(x), b.fuel);
      if (!wx.converged) {
        witnesses = false;
        break;
      }
      Nat u = pca::proj1(wx.value);
      if (!pca::kleene_T(e, Nat(x), u, b.fuel) ||
          !(pca::kleene_U(u) == via_e.value)) {
        witnesses = false;
        break;
      }
    }
    row.extracted_agrees = agrees;
    row.witnesses_pass = witnesses;
    rep.rows.push_back(row);
  }
  return rep;
}

MatrixReport validate_ct(const Budget& b, std::uint64_t max_x) {
  MatrixReport rep;
  Nat big_r = ct_realizer();
  SemEnv env;
  TypeExpr n_ty = ty(syntax::TypeKind::N);

  struct Inst {
    const char* name;
    Nat premise_realizer;
    std::function<Nat(const Nat&)> expected;  // expected e(x)
    TypeExpr rho;                             // with free x, y
  };
  std::vector<Inst> insts;
  insts.push_back({"rho=Id(N,y,x)", ac_premise_identity_witness(),
                   [](const Nat& x) { return x; },
                   syntax::ty_id(n_ty, syntax::t_var("y"), syntax::t_var("x"))});
  {
    // rho=Id(N,y,succ(x)): witness y = succ(x).
    Nat r = pca::encode(make_lam(
        ppair(papp(prim(PrimId::Succ), make_var(0)), make_const(0))));
    insts.push_back({"rho=Id(N,y,succ(x))", r,
                     [](const Nat& x) {
                       Nat v = x;
                       ++v;
                       return v;
                     },
                     syntax::ty_id(n_ty, syntax::t_var("y"),
                                   syntax::t_node(syntax::TermKind::Succ,
                                                  {syntax::t_var("x")}))});
  }
  for (const auto& inst : insts) {
    pca::EvalResult res = pca::apply(big_r, inst.premise_realizer, b.fuel);
    Verdict acc = res.converged ? Verdict::yes() : Verdict::maybe(Why::Fuel);
    if (res.converged) {
      Nat e = pca::proj1(res.value);
      Nat w = pca::proj2(res.value);
      for (std::uint64_t x = 0; x <= max_x && acc.holds(); ++x) {
        pca::EvalResult ex = pca::apply(e, Nat(x), b.fuel);
        pca::EvalResult wx = pca::apply(w, Nat(x), b.fuel);
        if (!ex.converged || !wx.converged) {
          acc = Verdict::maybe(Why::Fuel);
          break;
        }
        if (!(ex.value == inst.expected(Nat(x)))) {
          acc = Verdict::no();
          break;
        }
        Nat u = pca::proj1(wx.value);
        if (!pca::kleene_T(e, Nat(x), u, b.fuel) || !(pca::kleene_U(u) == ex.value)) {
          acc = Verdict::no();
          break;
        }
        SemEnv e2;
        e2.emplace("x", Nat(x));
        e2.emplace("y", ex.value);
        Nat rho_proof = pca::proj2(pca::proj2(wx.value));
        acc = v_and(acc, realizability::realizes(rho_proof, inst.rho, e2, b));
      }
    }
    rep.rows.push_back({inst.name, acc, ""});
  }
  {
    // Vacuous premise: nothing realizes A x E y Bot on samples.
    TypeExpr premise = syntax::ty_binder(
        syntax::TypeKind::Forall, "x", n_ty,
        syntax::ty_binder(syntax::TypeKind::Exists, "y", n_ty,
                          ty(syntax::TypeKind::Bot)));
    Verdict none = Verdict::yes(0);
    for (std::uint64_t i = 0; i <= 8; ++i)
      if (realizability::realizes(Nat(i), premise, env, b).holds())
        none = Verdict::no();
    rep.rows.push_back({"rho=Bot (vacuous)", none, ""});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma realiz

Verdict lemma_term_check(const HaTerm& t, const Budget& b) {
  Term embedded = embed_ha_term(t);
  pca::EvalResult r = pca::run(interp::interpret(embedded), b.fuel);
  if (!r.converged) return Verdict::maybe(Why::Fuel);
  return r.value == ha_eval(t, {}) ? Verdict::yes() : Verdict::no();
}

HaFormula gen_ha_formula(std::uint64_t& state, const std::vector<std::string>& scope,
                         int depth) {
  auto next = [&state] {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  auto gen_term = [&](auto&& self, int d) -> HaTerm {
    if (d <= 0) {
      if (!scope.empty() && next() % 2 == 0)
        return ha_var(scope[next() % scope.size()]);
      return ha_num(next() % 4);
    }
    switch (next() % 4) {
      case 0: return ha_succ(self(self, d - 1));
      case 1: return ha_add(self(self, d - 1), self(self, d - 1));
      case 2: return ha_mul(self(self, d - 1), self(self, d - 1));
      default:
        if (!scope.empty()) return ha_var(scope[next() % scope.size()]);
        return ha_num(next() % 4);
    }
  };
  if (depth <= 0) {
    if (next() % 8 == 0) return ha_false();
    return ha_eq(gen_term(gen_term, 1), gen_term(gen_term, 1));
  }
  switch (next() % 6) {
    case 0: return ha_and(gen_ha_formula(state, scope, depth - 1),
                          gen_ha_formula(state, scope, depth - 1));
    case 1: return ha_or(gen_ha_formula(state, scope, depth - 1),
                         gen_ha_formula(state, scope, depth - 1));
    case 2: return ha_imp(gen_ha_formula(state, scope, depth - 1),
                          gen_ha_formula(state, scope, depth - 1));
    case 3: {
      std::vector<std::string> sc = scope;
      std::string v = "q" + std::to_string(scope.size());
      sc.push_back(v);
      return ha_exists(v, gen_ha_formula(state, sc, depth - 1));
    }
    case 4: {
      std::vector<std::string> sc = scope;
      std::string v = "q" + std::to_string(scope.size());
      sc.push_back(v);
      return ha_forall(v, gen_ha_formula(state, sc, depth - 1));
    }
    default:
      return ha_eq(gen_term(gen_term, 2), gen_term(gen_term, 2));
  }
}

LemmaRealizReport lemma_realiz_suite(std::uint64_t seed, std::uint64_t formulas,
                                     std::uint64_t samples_per_formula,
                                     const Budget& b) {
  LemmaRealizReport rep;
  std::uint64_t state = seed;
  for (std::uint64_t i = 0; i < formulas; ++i) {
    HaFormula phi = gen_ha_formula(state, {}, 1 + static_cast<int>(state % 2));
    TypeExpr embedded = embed_ha(phi);
    ++rep.formulas;
    for (std::uint64_t n = 0; n < samples_per_formula; ++n) {
      Verdict vk = kleene_realizes(Nat(n), phi, {}, b);
      Verdict vm = realizability::realizes(Nat(n), embedded, {}, b);
      if (vk.decided() && vm.decided()) {
        ++rep.decided_pairs;
        if (vk.truth != vm.truth) {
          ++rep.disagreements;
          rep.failures.push_back("n=" + std::to_string(n) + " phi=" +
                                 to_string(phi) + ": kleene " + to_string(vk) +
                                 " vs model " + to_string(vm));
        }
      }
    }
  }
  return rep;
}

}  // namespace mtt::principles

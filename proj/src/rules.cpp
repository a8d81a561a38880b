#include "mtt/rules.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace mtt::rules {

using syntax::alpha_equal;
using syntax::Branch;
using syntax::Context;
using syntax::Judgement;
using syntax::JudgementKind;
using syntax::Stratum;
using syntax::substitute;
using syntax::Term;
using syntax::TermKind;
using syntax::TypeExpr;
using syntax::TypeKind;

namespace {

using Err = std::optional<std::string>;

Err ok() { return std::nullopt; }

bool ctx_equal(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) return false;
    if (!alpha_equal(a[i].second, b[i].second)) return false;
  }
  return true;
}

// big == base ++ ext?
bool ctx_extends(const Context& big, const Context& base, Context& ext) {
  if (big.size() < base.size()) return false;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (big[i].first != base[i].first) return false;
    if (!alpha_equal(big[i].second, base[i].second)) return false;
  }
  ext.assign(big.begin() + base.size(), big.end());
  return true;
}

struct Node {
  const DerivationNode& d;

  const Judgement& C() const { return d.conclusion.j; }
  std::size_t n() const { return d.premises.size(); }

  Err arity(std::size_t k) const {
    if (d.conclusion.is_cont)
      return std::string("conclusion must be a judgement");
    if (n() != k)
      return "expected " + std::to_string(k) + " premises, got " +
             std::to_string(n());
    for (const auto& p : d.premises)
      if (p.conclusion.is_cont)
        return std::string("unexpected context-formation premise");
    return ok();
  }

  const Judgement& P(std::size_t i) const { return d.premises[i].conclusion.j; }
};

Err want(bool c, const char* msg) {
  if (c) return ok();
  return std::string(msg);
}

#define CHECK(expr)                    \
  if (auto e__ = (expr); e__) return e__

#define REQ(cond, msg) CHECK(want((cond), (msg)))

bool is_wf(const Judgement& j) { return j.kind == JudgementKind::TypeWf; }
bool is_teq(const Judgement& j) { return j.kind == JudgementKind::TypeEq; }
bool is_of(const Judgement& j) { return j.kind == JudgementKind::TermOf; }
bool is_eq(const Judgement& j) { return j.kind == JudgementKind::TermEq; }

// ---------------------------------------------------------------------------
// Schema checkers

// Axiomatic type formations: conclusion  K stratum [any ctx], no premises.
RuleSchema leaf_type(const char* name, const char* display, TypeKind k, Stratum s) {
  return {name, display, [k, s](const DerivationNode& d) -> Err {
            Node nd{d};
            CHECK(nd.arity(0));
            const Judgement& c = nd.C();
            REQ(is_wf(c), "conclusion must be a type judgement");
            REQ(c.type_a->kind == k, "conclusion type has the wrong head");
            REQ(c.stratum == s, "conclusion stratum mismatch");
            return ok();
          }};
}

// Axiomatic memberships: conclusion  t in A [any ctx].
RuleSchema leaf_term(const char* name, const char* display, TermKind tk, TypeKind ak) {
  return {name, display, [tk, ak](const DerivationNode& d) -> Err {
            Node nd{d};
            CHECK(nd.arity(0));
            const Judgement& c = nd.C();
            REQ(is_of(c), "conclusion must be a term judgement");
            REQ(c.term_a->kind == tk, "conclusion term has the wrong head");
            REQ(c.of_type->kind == ak, "conclusion type has the wrong head");
            return ok();
          }};
}

// Stratum embeddings: A s1 [G]  =>  A s2 [G], same for equalities.
RuleSchema embed(const char* name, const char* display, Stratum from, Stratum to,
                 bool eq_form) {
  return {name, display, [from, to, eq_form](const DerivationNode& d) -> Err {
            Node nd{d};
            CHECK(nd.arity(1));
            const Judgement& c = nd.C();
            const Judgement& p = nd.P(0);
            if (eq_form) {
              REQ(is_teq(c) && is_teq(p), "both judgements must be type equalities");
              REQ(alpha_equal(c.type_b, p.type_b), "right-hand type changed");
            } else {
              REQ(is_wf(c) && is_wf(p), "both judgements must be type judgements");
            }
            REQ(p.stratum == from && c.stratum == to, "strata do not match the embedding");
            REQ(alpha_equal(c.type_a, p.type_a), "type changed across the embedding");
            REQ(ctx_equal(c.ctx, p.ctx), "context mismatch");
            return ok();
          }};
}

// Binary type formers at a fixed stratum.
RuleSchema form2(const char* name, const char* display, TypeKind k, Stratum s) {
  return {name, display, [k, s](const DerivationNode& d) -> Err {
            Node nd{d};
            CHECK(nd.arity(2));
            const Judgement& c = nd.C();
            REQ(is_wf(c) && c.stratum == s && c.type_a->kind == k,
                "conclusion is not the expected formation");
            for (int i = 0; i < 2; ++i) {
              REQ(is_wf(nd.P(i)) && nd.P(i).stratum == s, "premise stratum mismatch");
              REQ(ctx_equal(nd.P(i).ctx, c.ctx), "premise context mismatch");
            }
            REQ(alpha_equal(c.type_a->a, nd.P(0).type_a), "left component mismatch");
            REQ(alpha_equal(c.type_a->b, nd.P(1).type_a), "right component mismatch");
            return ok();
          }};
}

// Congruence for binary type formers: A=B s, C=D s => K(A,C)=K(B,D) s.
RuleSchema eq2(const char* name, const char* display, TypeKind k, Stratum s) {
  return {name, display, [k, s](const DerivationNode& d) -> Err {
            Node nd{d};
            CHECK(nd.arity(2));
            const Judgement& c = nd.C();
            REQ(is_teq(c) && c.stratum == s, "conclusion is not a type equality");
            REQ(c.type_a->kind == k && c.type_b->kind == k, "former mismatch");
            REQ(is_teq(nd.P(0)) && is_teq(nd.P(1)), "premises must be type equalities");
            REQ(ctx_equal(nd.P(0).ctx, c.ctx) && ctx_equal(nd.P(1).ctx, c.ctx),
                "premise context mismatch");
            REQ(alpha_equal(c.type_a->a, nd.P(0).type_a) &&
                    alpha_equal(c.type_b->a, nd.P(0).type_b),
                "left components mismatch");
            REQ(alpha_equal(c.type_a->b, nd.P(1).type_a) &&
                    alpha_equal(c.type_b->b, nd.P(1).type_b),
                "right components mismatch");
            return ok();
          }};
}

// Congruence for binder formers: C=D s [x in B], B=E s => K(x:B)C = K(x:E)D.
RuleSchema eq_binder(const char* name, const char* display, TypeKind k, Stratum s,
                     bool lax_dom_stratum = false) {
  return {name, display, [k, s, lax_dom_stratum](const DerivationNode& d) -> Err {
            Node nd{d};
            CHECK(nd.arity(2));
            const Judgement& c = nd.C();
            REQ(is_teq(c) && c.stratum == s, "conclusion is not a type equality");
            REQ(c.type_a->kind == k && c.type_b->kind == k, "former mismatch");
            const Judgement& body = nd.P(0);
            const Judgement& dom = nd.P(1);
            REQ(is_teq(body) && is_teq(dom), "premises must be type equalities");
            if (!lax_dom_stratum) REQ(dom.stratum == s, "domain premise stratum mismatch");
            REQ(body.stratum == s, "body premise stratum mismatch");
            REQ(ctx_equal(dom.ctx, c.ctx), "domain context mismatch");
            Context ext;
            REQ(ctx_extends(body.ctx, c.ctx, ext) && ext.size() == 1,
                "body premise must extend the context by the bound variable");
            REQ(alpha_equal(ext[0].second, c.type_a->a), "bound variable domain mismatch");
            REQ(alpha_equal(c.type_a->a, dom.type_a) &&
                    alpha_equal(c.type_b->a, dom.type_b),
                "domains mismatch");
            const std::string& x = ext[0].first;
            // Rename conclusion binders to the premise variable and compare.
            TypeExpr body_l = substitute(c.type_a->b, c.type_a->bound, syntax::t_var(x));
            TypeExpr body_r = substitute(c.type_b->b, c.type_b->bound, syntax::t_var(x));
            REQ(alpha_equal(body_l, body.type_a) && alpha_equal(body_r, body.type_b),
                "bodies mismatch");
            return ok();
          }};
}

// ---------------------------------------------------------------------------

std::vector<RuleSchema> build_table() {
  std::vector<RuleSchema> t;
  auto add = [&](const char* name, const char* display, auto fn) {
    t.push_back(RuleSchema{name, display, fn});
  };

  // --- contexts ---
  add("c-empty", "[] cont", [](const DerivationNode& d) -> Err {
    REQ(d.conclusion.is_cont && d.conclusion.ctx.empty(), "conclusion must be 'cont []'");
    REQ(d.premises.empty(), "no premises expected");
    return ok();
  });
  add("F-c", "A type [G] => G, x:A cont", [](const DerivationNode& d) -> Err {
    REQ(d.conclusion.is_cont, "conclusion must be a context formation");
    REQ(d.premises.size() == 1 && !d.premises[0].conclusion.is_cont,
        "expected one type-judgement premise");
    const Judgement& p = d.premises[0].conclusion.j;
    REQ(is_wf(p), "premise must be a type judgement");
    const Context& big = d.conclusion.ctx;
    REQ(!big.empty(), "context must be nonempty");
    Context base(big.begin(), big.end() - 1);
    REQ(ctx_equal(p.ctx, base), "premise context mismatch");
    REQ(alpha_equal(big.back().second, p.type_a), "new entry type mismatch");
    for (std::size_t i = 0; i + 1 < big.size(); ++i)
      REQ(big[i].first != big.back().first, "variable already in context");
    return ok();
  });
  add("var", "G,x:A,D cont => x in A [G,x:A,D]", [](const DerivationNode& d) -> Err {
    Node nd{d};
    REQ(!d.conclusion.is_cont, "conclusion must be a judgement");
    REQ(d.premises.size() == 1 && d.premises[0].conclusion.is_cont,
        "expected one context-formation premise");
    const Judgement& c = nd.C();
    REQ(is_of(c) && c.term_a->kind == TermKind::Var, "conclusion must be 'x in A'");
    REQ(ctx_equal(d.premises[0].conclusion.ctx, c.ctx), "premise context mismatch");
    for (const auto& [x, ty] : c.ctx)
      if (x == c.term_a->name) return want(alpha_equal(ty, c.of_type),
                                           "declared type mismatch");
    return std::string("variable not in context");
  });

  // --- embeddings ---
  t.push_back(embed("set-into-col", "A set => A col", Stratum::Set, Stratum::Col, false));
  t.push_back(embed("prop-into-col", "A prop => A col", Stratum::Prop, Stratum::Col, false));
  t.push_back(embed("props-into-prop", "A props => A prop", Stratum::SmallProp, Stratum::Prop, false));
  t.push_back(embed("props-into-set", "A props => A set", Stratum::SmallProp, Stratum::Set, false));
  t.push_back(embed("prop-into-col-eq", "A=B prop => A=B col", Stratum::Prop, Stratum::Col, true));
  t.push_back(embed("props-into-prop-eq", "A=B props => A=B prop", Stratum::SmallProp, Stratum::Prop, true));
  t.push_back(embed("props-into-set-eq", "A=B props => A=B set", Stratum::SmallProp, Stratum::Set, true));

  // props eq1/eq2 mediate between type equality of small propositions and
  // term equality of their codes in prop_s, through the hat coding.
  add("props-eq1", "phi=psi props => hat(phi)=hat(psi) in props",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(1));
        const Judgement& c = nd.C();
        const Judgement& p = nd.P(0);
        REQ(is_teq(p) && p.stratum == Stratum::SmallProp,
            "premise must be a small-proposition equality");
        REQ(is_eq(c) && c.of_type->kind == TypeKind::PropS,
            "conclusion must be a term equality in props");
        REQ(ctx_equal(c.ctx, p.ctx), "context mismatch");
        REQ(alpha_equal(c.term_a, syntax::hat(p.type_a)) &&
                alpha_equal(c.term_b, syntax::hat(p.type_b)),
            "codes do not match the hats of the premise types");
        return ok();
      });
  add("props-eq2", "hat(phi)=hat(psi) in props => phi=psi props",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(1));
        const Judgement& c = nd.C();
        const Judgement& p = nd.P(0);
        REQ(is_eq(p) && p.of_type->kind == TypeKind::PropS,
            "premise must be a term equality in props");
        REQ(is_teq(c) && c.stratum == Stratum::SmallProp,
            "conclusion must be a small-proposition equality");
        REQ(ctx_equal(c.ctx, p.ctx), "context mismatch");
        REQ(alpha_equal(p.term_a, syntax::hat(c.type_a)) &&
                alpha_equal(p.term_b, syntax::hat(c.type_b)),
            "premise codes do not match the hats of the conclusion types");
        return ok();
      });

  // --- type equality ---
  add("ref-ty", "A type => A=A type", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_wf(p) && is_teq(c) && c.stratum == p.stratum, "judgement forms mismatch");
    REQ(ctx_equal(c.ctx, p.ctx), "context mismatch");
    REQ(alpha_equal(c.type_a, p.type_a) && alpha_equal(c.type_b, p.type_a),
        "conclusion is not the reflexivity instance");
    return ok();
  });
  add("sym-ty", "A=B type => B=A type", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_teq(p) && is_teq(c) && c.stratum == p.stratum, "judgement forms mismatch");
    REQ(ctx_equal(c.ctx, p.ctx), "context mismatch");
    REQ(alpha_equal(c.type_a, p.type_b) && alpha_equal(c.type_b, p.type_a),
        "conclusion is not the symmetric instance");
    return ok();
  });
  add("tra-ty", "A=B, B=C => A=C", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_teq(c) && is_teq(nd.P(0)) && is_teq(nd.P(1)), "judgement forms mismatch");
    REQ(c.stratum == nd.P(0).stratum && c.stratum == nd.P(1).stratum, "strata mismatch");
    REQ(ctx_equal(c.ctx, nd.P(0).ctx) && ctx_equal(c.ctx, nd.P(1).ctx), "context mismatch");
    REQ(alpha_equal(nd.P(0).type_b, nd.P(1).type_a), "middle types mismatch");
    REQ(alpha_equal(c.type_a, nd.P(0).type_a) && alpha_equal(c.type_b, nd.P(1).type_b),
        "endpoints mismatch");
    return ok();
  });

  // subT / sub and their typed variants. Premise layout:
  //   subT:   C type [G, x1:A1..xn:An]; a_i=b_i in A_i(a..) [G]       (1+n)
  //   subT_m: as subT plus a_i in A_i(a..) and b_i in A_i(b..) [G]    (1+3n)
  auto check_sub = [](const DerivationNode& d, bool type_form, bool modified) -> Err {
    Node nd{d};
    REQ(!d.conclusion.is_cont, "conclusion must be a judgement");
    const Judgement& c = nd.C();
    std::size_t first = type_form ? 1 : (modified ? 2 : 1);
    REQ(nd.n() >= first + 1, "missing premises");
    const Judgement& subject = nd.P(0);
    REQ(type_form ? is_wf(subject) : is_of(subject), "subject premise has wrong form");
    if (!type_form && modified) {
      REQ(is_wf(nd.P(1)), "second premise must type the subject");
      REQ(ctx_equal(nd.P(1).ctx, subject.ctx), "typing premise context mismatch");
      REQ(alpha_equal(nd.P(1).type_a, subject.of_type), "typing premise type mismatch");
    }
    Context ext;
    REQ(ctx_extends(subject.ctx, c.ctx, ext) && !ext.empty(),
        "subject context must extend the conclusion context");
    std::size_t n = ext.size();
    std::size_t expected = first + (modified ? 3 * n : n);
    REQ(nd.n() == expected, "premise count does not match the substitution arity");
    std::vector<Term> as(n), bs(n);
    // Equality premises are last; in the modified form memberships precede.
    std::size_t eq_base = first + (modified ? 2 * n : 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Judgement& e = nd.P(eq_base + i);
      REQ(is_eq(e), "substitution premise must be a term equality");
      REQ(ctx_equal(e.ctx, c.ctx), "substitution premise context mismatch");
      as[i] = e.term_a;
      bs[i] = e.term_b;
      TypeExpr expect_ty = ext[i].second;
      for (std::size_t j = 0; j < i; ++j)
        expect_ty = substitute(expect_ty, ext[j].first, as[j]);
      REQ(alpha_equal(e.of_type, expect_ty), "substitution premise type mismatch");
    }
    if (modified) {
      for (std::size_t i = 0; i < n; ++i) {
        const Judgement& ma = nd.P(first + i);
        const Judgement& mb = nd.P(first + n + i);
        REQ(is_of(ma) && is_of(mb), "membership premise has wrong form");
        REQ(alpha_equal(ma.term_a, as[i]) && alpha_equal(mb.term_a, bs[i]),
            "membership premises do not match the equalities");
      }
    }
    auto subst_all = [&](auto thing, const std::vector<Term>& vals) {
      for (std::size_t i = 0; i < n; ++i)
        thing = substitute(thing, ext[i].first, vals[i]);
      return thing;
    };
    if (type_form) {
      REQ(is_teq(c) && c.stratum == subject.stratum, "conclusion form mismatch");
      REQ(alpha_equal(c.type_a, subst_all(subject.type_a, as)) &&
              alpha_equal(c.type_b, subst_all(subject.type_a, bs)),
          "conclusion is not the substituted instance");
    } else {
      REQ(is_eq(c), "conclusion form mismatch");
      REQ(alpha_equal(c.term_a, subst_all(subject.term_a, as)) &&
              alpha_equal(c.term_b, subst_all(subject.term_a, bs)),
          "conclusion terms are not the substituted instances");
      REQ(alpha_equal(c.of_type, subst_all(subject.of_type, as)),
          "conclusion type is not the substituted instance");
    }
    return ok();
  };
  add("subT", "C type [x:A..]; a=b in A.. => C(a)=C(b) type",
      [check_sub](const DerivationNode& d) { return check_sub(d, true, false); });
  add("subT_m", "subT with explicit membership premises",
      [check_sub](const DerivationNode& d) { return check_sub(d, true, true); });
  add("sub", "c in C [x:A..]; a=b in A.. => c(a)=c(b) in C(a)",
      [check_sub](const DerivationNode& d) { return check_sub(d, false, false); });
  add("sub_m", "sub with typing and membership premises",
      [check_sub](const DerivationNode& d) { return check_sub(d, false, true); });

  // --- term equality ---
  add("ref-tm", "a in A => a=a in A", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_of(p) && is_eq(c), "judgement forms mismatch");
    REQ(ctx_equal(c.ctx, p.ctx), "context mismatch");
    REQ(alpha_equal(c.term_a, p.term_a) && alpha_equal(c.term_b, p.term_a) &&
            alpha_equal(c.of_type, p.of_type),
        "conclusion is not the reflexivity instance");
    return ok();
  });
  add("sym-tm", "a=b in A => b=a in A", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_eq(p) && is_eq(c), "judgement forms mismatch");
    REQ(ctx_equal(c.ctx, p.ctx) && alpha_equal(c.of_type, p.of_type),
        "context or type mismatch");
    REQ(alpha_equal(c.term_a, p.term_b) && alpha_equal(c.term_b, p.term_a),
        "conclusion is not the symmetric instance");
    return ok();
  });
  add("tra-tm", "a=b, b=c => a=c", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_eq(c) && is_eq(nd.P(0)) && is_eq(nd.P(1)), "judgement forms mismatch");
    REQ(ctx_equal(c.ctx, nd.P(0).ctx) && ctx_equal(c.ctx, nd.P(1).ctx), "context mismatch");
    REQ(alpha_equal(c.of_type, nd.P(0).of_type) && alpha_equal(c.of_type, nd.P(1).of_type),
        "type mismatch");
    REQ(alpha_equal(nd.P(0).term_b, nd.P(1).term_a), "middle terms mismatch");
    REQ(alpha_equal(c.term_a, nd.P(0).term_a) && alpha_equal(c.term_b, nd.P(1).term_b),
        "endpoints mismatch");
    return ok();
  });
  add("conv", "a in A; A=B type => a in B", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_of(c) && is_of(nd.P(0)) && is_teq(nd.P(1)), "judgement forms mismatch");
    REQ(ctx_equal(c.ctx, nd.P(0).ctx) && ctx_equal(c.ctx, nd.P(1).ctx), "context mismatch");
    REQ(alpha_equal(c.term_a, nd.P(0).term_a), "subject changed");
    REQ(alpha_equal(nd.P(0).of_type, nd.P(1).type_a), "conversion source mismatch");
    REQ(alpha_equal(c.of_type, nd.P(1).type_b), "conversion target mismatch");
    return ok();
  });
  add("conv-eq", "a=b in A; A=B type => a=b in B", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_eq(c) && is_eq(nd.P(0)) && is_teq(nd.P(1)), "judgement forms mismatch");
    REQ(ctx_equal(c.ctx, nd.P(0).ctx) && ctx_equal(c.ctx, nd.P(1).ctx), "context mismatch");
    REQ(alpha_equal(c.term_a, nd.P(0).term_a) && alpha_equal(c.term_b, nd.P(0).term_b),
        "subjects changed");
    REQ(alpha_equal(nd.P(0).of_type, nd.P(1).type_a), "conversion source mismatch");
    REQ(alpha_equal(c.of_type, nd.P(1).type_b), "conversion target mismatch");
    return ok();
  });

  // --- strong indexed sum (collection level; sets reach it by embedding) ---
  add("F-Sig-col", "C col [G,x:B] => Sig(x:B)C col", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_wf(c) && c.stratum == Stratum::Col && c.type_a->kind == TypeKind::Sigma,
        "conclusion is not a Sigma collection formation");
    REQ(is_wf(p) && p.stratum == Stratum::Col, "premise must be a collection judgement");
    Context ext;
    REQ(ctx_extends(p.ctx, c.ctx, ext) && ext.size() == 1, "premise context mismatch");
    REQ(alpha_equal(ext[0].second, c.type_a->a), "domain mismatch");
    TypeExpr body = substitute(c.type_a->b, c.type_a->bound, syntax::t_var(ext[0].first));
    REQ(alpha_equal(body, p.type_a), "body mismatch");
    return ok();
  });
  add("F-Sig-col_m", "B col; C col [G,x:B] => Sig(x:B)C col",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(2));
        const Judgement& c = nd.C();
        REQ(is_wf(c) && c.stratum == Stratum::Col && c.type_a->kind == TypeKind::Sigma,
            "conclusion is not a Sigma collection formation");
        const Judgement& dom = nd.P(0);
        const Judgement& body = nd.P(1);
        REQ(is_wf(dom) && dom.stratum == Stratum::Col && ctx_equal(dom.ctx, c.ctx),
            "domain premise mismatch");
        REQ(alpha_equal(dom.type_a, c.type_a->a), "domain mismatch");
        REQ(is_wf(body) && body.stratum == Stratum::Col, "body premise mismatch");
        Context ext;
        REQ(ctx_extends(body.ctx, c.ctx, ext) && ext.size() == 1,
            "body premise context mismatch");
        REQ(alpha_equal(ext[0].second, c.type_a->a), "bound domain mismatch");
        TypeExpr bexp = substitute(c.type_a->b, c.type_a->bound,
                                   syntax::t_var(ext[0].first));
        REQ(alpha_equal(bexp, body.type_a), "body mismatch");
        return ok();
      });
  add("I-Sig", "b in B; c in C(b); C col [G,x:B] => <b,c> in Sig(x:B)C",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::PairSigma &&
                c.of_type->kind == TypeKind::Sigma,
            "conclusion is not a Sigma introduction");
        const Judgement& pb = nd.P(0);
        const Judgement& pc = nd.P(1);
        const Judgement& pC = nd.P(2);
        REQ(is_of(pb) && is_of(pc) && is_wf(pC), "premise forms mismatch");
        REQ(ctx_equal(pb.ctx, c.ctx) && ctx_equal(pc.ctx, c.ctx), "context mismatch");
        REQ(alpha_equal(pb.of_type, c.of_type->a), "domain mismatch");
        REQ(alpha_equal(c.term_a->args[0], pb.term_a) &&
                alpha_equal(c.term_a->args[1], pc.term_a),
            "pair components mismatch");
        Context ext;
        REQ(ctx_extends(pC.ctx, c.ctx, ext) && ext.size() == 1, "family premise mismatch");
        TypeExpr inst = substitute(c.of_type->b, c.of_type->bound, pb.term_a);
        REQ(alpha_equal(pc.of_type, inst), "component type is not C(b)");
        return ok();
      });
  add("E-Sig", "M col [G,z:Sig]; d in Sig; m in M(<x,y>) [G,x:B,y:C] => ElSig(d,m) in M(d)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ElSigma,
            "conclusion is not a Sigma elimination");
        const Judgement& pM = nd.P(0);
        const Judgement& pd = nd.P(1);
        const Judgement& pm = nd.P(2);
        REQ(is_wf(pM) && is_of(pd) && is_of(pm), "premise forms mismatch");
        REQ(ctx_equal(pd.ctx, c.ctx), "scrutinee context mismatch");
        REQ(pd.of_type->kind == TypeKind::Sigma, "scrutinee is not of Sigma type");
        Context extM;
        REQ(ctx_extends(pM.ctx, c.ctx, extM) && extM.size() == 1 &&
                alpha_equal(extM[0].second, pd.of_type),
            "motive context mismatch");
        const std::string& z = extM[0].first;
        Context extm;
        REQ(ctx_extends(pm.ctx, c.ctx, extm) && extm.size() == 2, "branch context mismatch");
        REQ(alpha_equal(extm[0].second, pd.of_type->a), "branch domain mismatch");
        TypeExpr fam = substitute(pd.of_type->b, pd.of_type->bound,
                                  syntax::t_var(extm[0].first));
        REQ(alpha_equal(extm[1].second, fam), "branch family mismatch");
        REQ(alpha_equal(c.term_a->args[0], pd.term_a), "scrutinee mismatch");
        Term branch_expected =
            syntax::t_node(TermKind::ElSigma, {pd.term_a},
                           {Branch{{extm[0].first, extm[1].first}, pm.term_a}});
        REQ(alpha_equal(c.term_a, branch_expected), "branch mismatch");
        Term pair_xy = syntax::t_node(
            TermKind::PairSigma,
            {syntax::t_var(extm[0].first), syntax::t_var(extm[1].first)});
        REQ(alpha_equal(pm.of_type, substitute(pM.type_a, z, pair_xy)),
            "branch motive mismatch");
        REQ(alpha_equal(c.of_type, substitute(pM.type_a, z, pd.term_a)),
            "conclusion motive mismatch");
        return ok();
      });
  add("C-Sig", "M col [G,z:Sig]; b in B; c in C(b); m in M(<x,y>) [...] => ElSig(<b,c>,m)=m(b,c) in M(<b,c>)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(4));
        const Judgement& c = nd.C();
        REQ(is_eq(c) && c.term_a->kind == TermKind::ElSigma,
            "conclusion is not a Sigma conversion");
        const Judgement& pM = nd.P(0);
        const Judgement& pb = nd.P(1);
        const Judgement& pc = nd.P(2);
        const Judgement& pm = nd.P(3);
        REQ(is_wf(pM) && is_of(pb) && is_of(pc) && is_of(pm), "premise forms mismatch");
        Context extM;
        REQ(ctx_extends(pM.ctx, c.ctx, extM) && extM.size() == 1, "motive ctx mismatch");
        const std::string& z = extM[0].first;
        Context extm;
        REQ(ctx_extends(pm.ctx, c.ctx, extm) && extm.size() == 2, "branch ctx mismatch");
        Term pair_bc = syntax::t_node(TermKind::PairSigma, {pb.term_a, pc.term_a});
        Term lhs = syntax::t_node(TermKind::ElSigma, {pair_bc},
                                  {Branch{{extm[0].first, extm[1].first}, pm.term_a}});
        REQ(alpha_equal(c.term_a, lhs), "left-hand side mismatch");
        Term rhs = substitute(substitute(pm.term_a, extm[0].first, pb.term_a),
                              extm[1].first, pc.term_a);
        REQ(alpha_equal(c.term_b, rhs), "right-hand side is not the contracted branch");
        REQ(alpha_equal(c.of_type, substitute(pM.type_a, z, pair_bc)),
            "conclusion motive mismatch");
        return ok();
      });
  t.push_back(eq_binder("eq-Sig-col", "C=D col [x:B]; B=E col => Sig", TypeKind::Sigma,
                        Stratum::Col));
  t.push_back(eq_binder("eq-Pi-col", "C=D col [x:B]; B=E col => Pi", TypeKind::Pi,
                        Stratum::Col));

  // --- empty set ---
  t.push_back(leaf_type("F-Em", "N0 set", TypeKind::N0, Stratum::Set));
  add("E-Em", "a in N0; A col [G,x:N0] => emp0(a) in A(a)", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_of(c) && c.term_a->kind == TermKind::Emp0, "conclusion is not an emp0 form");
    const Judgement& pa = nd.P(0);
    const Judgement& pA = nd.P(1);
    REQ(is_of(pa) && pa.of_type->kind == TypeKind::N0 && ctx_equal(pa.ctx, c.ctx),
        "scrutinee premise mismatch");
    REQ(alpha_equal(c.term_a->args[0], pa.term_a), "subject mismatch");
    Context ext;
    REQ(is_wf(pA) && ctx_extends(pA.ctx, c.ctx, ext) && ext.size() == 1 &&
            ext[0].second->kind == TypeKind::N0,
        "motive premise mismatch");
    REQ(alpha_equal(c.of_type, substitute(pA.type_a, ext[0].first, pa.term_a)),
        "conclusion type mismatch");
    return ok();
  });

  // --- singleton ---
  t.push_back(leaf_type("S", "N1 set", TypeKind::N1, Stratum::Set));
  t.push_back(leaf_term("I-S", "star in N1", TermKind::Star, TypeKind::N1));
  add("E-S", "t in N1; M col [G,z:N1]; c in M(star) => elN1(t,c) in M(t)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ElN1, "conclusion is not elN1");
        const Judgement& pt = nd.P(0);
        const Judgement& pM = nd.P(1);
        const Judgement& pc = nd.P(2);
        REQ(is_of(pt) && pt.of_type->kind == TypeKind::N1 && ctx_equal(pt.ctx, c.ctx),
            "scrutinee premise mismatch");
        REQ(is_of(pc) && ctx_equal(pc.ctx, c.ctx), "branch premise mismatch");
        Context ext;
        REQ(is_wf(pM) && ctx_extends(pM.ctx, c.ctx, ext) && ext.size() == 1 &&
                ext[0].second->kind == TypeKind::N1,
            "motive premise mismatch");
        const std::string& z = ext[0].first;
        REQ(alpha_equal(pc.of_type,
                        substitute(pM.type_a, z, syntax::t_leaf(TermKind::Star))),
            "branch type is not M(star)");
        REQ(alpha_equal(c.term_a->args[0], pt.term_a) &&
                alpha_equal(c.term_a->args[1], pc.term_a),
            "eliminator parts mismatch");
        REQ(alpha_equal(c.of_type, substitute(pM.type_a, z, pt.term_a)),
            "conclusion type is not M(t)");
        return ok();
      });
  add("C-S", "M col [G,z:N1]; c in M(star) => elN1(star,c)=c in M(star)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(2));
        const Judgement& c = nd.C();
        REQ(is_eq(c) && c.term_a->kind == TermKind::ElN1, "conclusion is not a singleton conversion");
        const Judgement& pM = nd.P(0);
        const Judgement& pc = nd.P(1);
        Context ext;
        REQ(is_wf(pM) && ctx_extends(pM.ctx, c.ctx, ext) && ext.size() == 1 &&
                ext[0].second->kind == TypeKind::N1,
            "motive premise mismatch");
        REQ(is_of(pc) && ctx_equal(pc.ctx, c.ctx), "branch premise mismatch");
        const std::string& z = ext[0].first;
        TypeExpr m_star = substitute(pM.type_a, z, syntax::t_leaf(TermKind::Star));
        REQ(alpha_equal(pc.of_type, m_star), "branch type is not M(star)");
        REQ(c.term_a->args[0]->kind == TermKind::Star, "scrutinee must be star");
        REQ(alpha_equal(c.term_a->args[1], pc.term_a) && alpha_equal(c.term_b, pc.term_a),
            "conversion subject mismatch");
        REQ(alpha_equal(c.of_type, m_star), "conclusion type is not M(star)");
        return ok();
      });

  return t;
}

// --- natural numbers, lists, sums, products --------------------------------

std::vector<RuleSchema> build_table_part2() {
  std::vector<RuleSchema> t;
  auto add = [&](const char* name, const char* display, auto fn) {
    t.push_back(RuleSchema{name, display, fn});
  };

  t.push_back(leaf_type("F-N", "N set", TypeKind::N, Stratum::Set));
  t.push_back(leaf_term("I1-N", "0 in N", TermKind::Zero, TypeKind::N));
  add("I2-N", "n in N => succ(n) in N", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_of(c) && is_of(p), "judgement forms mismatch");
    REQ(c.term_a->kind == TermKind::Succ && c.of_type->kind == TypeKind::N &&
            p.of_type->kind == TypeKind::N,
        "not a successor introduction");
    REQ(ctx_equal(c.ctx, p.ctx) && alpha_equal(c.term_a->args[0], p.term_a),
        "subject mismatch");
    return ok();
  });

  // Shared checker for the recursor rules of N.
  struct ElN {
    TypeExpr motive;           // M with z free
    std::string z;             // motive variable
    Context branch_ext;        // [y:N, z2:M(y)]
    Term branch;               // r
  };
  auto parse_eln_premises = [](const Node& nd, const Judgement& c, std::size_t i_motive,
                               std::size_t i_branch, ElN& out) -> Err {
    const Judgement& pM = nd.P(i_motive);
    const Judgement& pr = nd.P(i_branch);
    REQ(is_wf(pM) && is_of(pr), "motive/branch premise forms mismatch");
    Context extM;
    REQ(ctx_extends(pM.ctx, c.ctx, extM) && extM.size() == 1 &&
            extM[0].second->kind == TypeKind::N,
        "motive context must extend by one N variable");
    out.motive = pM.type_a;
    out.z = extM[0].first;
    Context extb;
    REQ(ctx_extends(pr.ctx, c.ctx, extb) && extb.size() == 2, "branch context mismatch");
    REQ(extb[0].second->kind == TypeKind::N, "branch first variable must be in N");
    REQ(alpha_equal(extb[1].second,
                    substitute(out.motive, out.z, syntax::t_var(extb[0].first))),
        "branch second variable must inhabit M(y)");
    Term succ_y = syntax::t_node(TermKind::Succ, {syntax::t_var(extb[0].first)});
    REQ(alpha_equal(pr.of_type, substitute(out.motive, out.z, succ_y)),
        "branch type must be M(succ(y))");
    out.branch_ext = extb;
    out.branch = pr.term_a;
    return ok();
  };
  auto eln_term = [](const Term& scrut, const Term& base, const ElN& e) {
    return syntax::t_node(TermKind::ElN, {scrut, base},
                          {Branch{{e.branch_ext[0].first, e.branch_ext[1].first},
                                  e.branch}});
  };
  add("E-N", "M col [G,u:N]; t in N; a in M(0); r in M(succ y) [G,y:N,z:M(y)] => elN(t,a,r) in M(t)",
      [parse_eln_premises, eln_term](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(4));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ElN, "conclusion is not elN");
        const Judgement& pt = nd.P(1);
        const Judgement& pa = nd.P(2);
        REQ(is_of(pt) && pt.of_type->kind == TypeKind::N && ctx_equal(pt.ctx, c.ctx),
            "scrutinee premise mismatch");
        REQ(is_of(pa) && ctx_equal(pa.ctx, c.ctx), "base premise mismatch");
        ElN e;
        CHECK(parse_eln_premises(nd, c, 0, 3, e));
        REQ(alpha_equal(pa.of_type,
                        substitute(e.motive, e.z, syntax::t_leaf(TermKind::Zero))),
            "base type must be M(0)");
        REQ(alpha_equal(c.term_a, eln_term(pt.term_a, pa.term_a, e)),
            "eliminator mismatch");
        REQ(alpha_equal(c.of_type, substitute(e.motive, e.z, pt.term_a)),
            "conclusion type must be M(t)");
        return ok();
      });
  add("C1-N", "M col [G,u:N]; a in M(0); r-branch => elN(0,a,r)=a in M(0)",
      [parse_eln_premises, eln_term](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_eq(c) && c.term_a->kind == TermKind::ElN, "conclusion is not an elN conversion");
        const Judgement& pa = nd.P(1);
        REQ(is_of(pa) && ctx_equal(pa.ctx, c.ctx), "base premise mismatch");
        ElN e;
        CHECK(parse_eln_premises(nd, c, 0, 2, e));
        TypeExpr m0 = substitute(e.motive, e.z, syntax::t_leaf(TermKind::Zero));
        REQ(alpha_equal(pa.of_type, m0), "base type must be M(0)");
        REQ(alpha_equal(c.term_a, eln_term(syntax::t_leaf(TermKind::Zero), pa.term_a, e)),
            "left-hand side mismatch");
        REQ(alpha_equal(c.term_b, pa.term_a), "right-hand side must be the base");
        REQ(alpha_equal(c.of_type, m0), "conclusion type must be M(0)");
        return ok();
      });
  add("C2-N", "M col; s in N; a in M(0); r-branch => elN(succ s,a,r)=r[s, elN(s,a,r)] in M(succ s)",
      [parse_eln_premises, eln_term](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(4));
        const Judgement& c = nd.C();
        REQ(is_eq(c), "conclusion must be a term equality");
        const Judgement& ps = nd.P(1);
        const Judgement& pa = nd.P(2);
        REQ(is_of(ps) && ps.of_type->kind == TypeKind::N && ctx_equal(ps.ctx, c.ctx),
            "numeral premise mismatch");
        REQ(is_of(pa) && ctx_equal(pa.ctx, c.ctx), "base premise mismatch");
        ElN e;
        CHECK(parse_eln_premises(nd, c, 0, 3, e));
        Term succ_s = syntax::t_node(TermKind::Succ, {ps.term_a});
        REQ(alpha_equal(c.term_a, eln_term(succ_s, pa.term_a, e)),
            "left-hand side mismatch");
        Term rec = eln_term(ps.term_a, pa.term_a, e);
        Term rhs = substitute(substitute(e.branch, e.branch_ext[0].first, ps.term_a),
                              e.branch_ext[1].first, rec);
        REQ(alpha_equal(c.term_b, rhs), "right-hand side is not the unfolding");
        REQ(alpha_equal(c.of_type, substitute(e.motive, e.z, succ_s)),
            "conclusion type must be M(succ s)");
        return ok();
      });

  // --- lists ---
  add("F-list", "C set => List(C) set", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_wf(c) && is_wf(p) && c.stratum == Stratum::Set && p.stratum == Stratum::Set,
        "judgement forms mismatch");
    REQ(c.type_a->kind == TypeKind::List && ctx_equal(c.ctx, p.ctx), "shape mismatch");
    REQ(alpha_equal(c.type_a->a, p.type_a), "element set mismatch");
    return ok();
  });
  add("I1-list", "List(C) set => epsilon in List(C)", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_of(c) && is_wf(p) && p.type_a->kind == TypeKind::List, "forms mismatch");
    REQ(c.term_a->kind == TermKind::EpsList && alpha_equal(c.of_type, p.type_a) &&
            ctx_equal(c.ctx, p.ctx),
        "not an empty-list introduction");
    return ok();
  });
  add("I2-list", "s in List(C); c in C => cons(s,c) in List(C)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(2));
        const Judgement& c = nd.C();
        const Judgement& ps = nd.P(0);
        const Judgement& pc = nd.P(1);
        REQ(is_of(c) && is_of(ps) && is_of(pc), "forms mismatch");
        REQ(c.term_a->kind == TermKind::Cons && c.of_type->kind == TypeKind::List,
            "not a cons introduction");
        REQ(ctx_equal(c.ctx, ps.ctx) && ctx_equal(c.ctx, pc.ctx), "context mismatch");
        REQ(alpha_equal(ps.of_type, c.of_type), "list premise type mismatch");
        REQ(alpha_equal(pc.of_type, c.of_type->a), "element premise type mismatch");
        REQ(alpha_equal(c.term_a->args[0], ps.term_a) &&
                alpha_equal(c.term_a->args[1], pc.term_a),
            "cons parts mismatch");
        return ok();
      });
  struct ElList {
    TypeExpr motive;
    std::string z;
    Context ext;  // [x:List C, y:C, u:L(x)]
    Term branch;
  };
  auto parse_ellist = [](const Node& nd, const Judgement& c, const TypeExpr& list_ty,
                         std::size_t i_motive, std::size_t i_branch, ElList& out) -> Err {
    const Judgement& pM = nd.P(i_motive);
    const Judgement& pl = nd.P(i_branch);
    REQ(is_wf(pM) && is_of(pl), "motive/branch forms mismatch");
    Context extM;
    REQ(ctx_extends(pM.ctx, c.ctx, extM) && extM.size() == 1 &&
            alpha_equal(extM[0].second, list_ty),
        "motive context mismatch");
    out.motive = pM.type_a;
    out.z = extM[0].first;
    Context ext;
    REQ(ctx_extends(pl.ctx, c.ctx, ext) && ext.size() == 3, "branch context mismatch");
    REQ(alpha_equal(ext[0].second, list_ty), "branch list variable mismatch");
    REQ(alpha_equal(ext[1].second, list_ty->a), "branch element variable mismatch");
    REQ(alpha_equal(ext[2].second,
                    substitute(out.motive, out.z, syntax::t_var(ext[0].first))),
        "branch recursive variable mismatch");
    Term cons_xy = syntax::t_node(
        TermKind::Cons, {syntax::t_var(ext[0].first), syntax::t_var(ext[1].first)});
    REQ(alpha_equal(pl.of_type, substitute(out.motive, out.z, cons_xy)),
        "branch type must be L(cons(x,y))");
    out.ext = ext;
    out.branch = pl.term_a;
    return ok();
  };
  auto ellist_term = [](const Term& scrut, const Term& base, const ElList& e) {
    return syntax::t_node(TermKind::ElList, {scrut, base},
                          {Branch{{e.ext[0].first, e.ext[1].first, e.ext[2].first},
                                  e.branch}});
  };
  add("E-list", "L col [G,z:List C]; s in List C; a in L(eps); l-branch => elList(s,a,l) in L(s)",
      [parse_ellist, ellist_term](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(4));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ElList, "conclusion is not elList");
        const Judgement& ps = nd.P(1);
        const Judgement& pa = nd.P(2);
        REQ(is_of(ps) && ps.of_type->kind == TypeKind::List && ctx_equal(ps.ctx, c.ctx),
            "scrutinee premise mismatch");
        REQ(is_of(pa) && ctx_equal(pa.ctx, c.ctx), "base premise mismatch");
        ElList e;
        CHECK(parse_ellist(nd, c, ps.of_type, 0, 3, e));
        REQ(alpha_equal(pa.of_type,
                        substitute(e.motive, e.z, syntax::t_leaf(TermKind::EpsList))),
            "base type must be L(epsilon)");
        REQ(alpha_equal(c.term_a, ellist_term(ps.term_a, pa.term_a, e)),
            "eliminator mismatch");
        REQ(alpha_equal(c.of_type, substitute(e.motive, e.z, ps.term_a)),
            "conclusion type must be L(s)");
        return ok();
      });
  add("C1-list", "L col; a in L(eps); l-branch => elList(eps,a,l)=a in L(eps)",
      [parse_ellist, ellist_term](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_eq(c) && c.term_a->kind == TermKind::ElList, "conclusion mismatch");
        const Judgement& pa = nd.P(1);
        REQ(is_of(pa) && ctx_equal(pa.ctx, c.ctx), "base premise mismatch");
        REQ(c.term_a->args[0]->kind == TermKind::EpsList, "scrutinee must be epsilon");
        const TypeExpr& list_ty = nd.P(0).ctx.empty()
                                      ? c.of_type
                                      : nd.P(0).ctx.back().second;
        ElList e;
        CHECK(parse_ellist(nd, c, list_ty, 0, 2, e));
        TypeExpr l_eps = substitute(e.motive, e.z, syntax::t_leaf(TermKind::EpsList));
        REQ(alpha_equal(pa.of_type, l_eps), "base type must be L(epsilon)");
        REQ(alpha_equal(c.term_a,
                        ellist_term(syntax::t_leaf(TermKind::EpsList), pa.term_a, e)),
            "left-hand side mismatch");
        REQ(alpha_equal(c.term_b, pa.term_a) && alpha_equal(c.of_type, l_eps),
            "conversion target mismatch");
        return ok();
      });
  add("C2-list", "L col; s in List C; c in C; a in L(eps); l-branch => elList(cons(s,c),a,l)=l(s,c,elList(s,a,l))",
      [parse_ellist, ellist_term](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(5));
        const Judgement& c = nd.C();
        REQ(is_eq(c), "conclusion must be a term equality");
        const Judgement& ps = nd.P(1);
        const Judgement& pc = nd.P(2);
        const Judgement& pa = nd.P(3);
        REQ(is_of(ps) && ps.of_type->kind == TypeKind::List, "list premise mismatch");
        REQ(is_of(pc) && alpha_equal(pc.of_type, ps.of_type->a), "element premise mismatch");
        REQ(is_of(pa), "base premise mismatch");
        ElList e;
        CHECK(parse_ellist(nd, c, ps.of_type, 0, 4, e));
        Term cons_sc = syntax::t_node(TermKind::Cons, {ps.term_a, pc.term_a});
        REQ(alpha_equal(c.term_a, ellist_term(cons_sc, pa.term_a, e)),
            "left-hand side mismatch");
        Term rec = ellist_term(ps.term_a, pa.term_a, e);
        Term rhs = substitute(
            substitute(substitute(e.branch, e.ext[0].first, ps.term_a),
                       e.ext[1].first, pc.term_a),
            e.ext[2].first, rec);
        REQ(alpha_equal(c.term_b, rhs), "right-hand side is not the unfolding");
        REQ(alpha_equal(c.of_type, substitute(e.motive, e.z, cons_sc)),
            "conclusion type mismatch");
        return ok();
      });
  add("eq-list", "C=D set => List(C)=List(D) set", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_teq(c) && is_teq(p) && c.stratum == Stratum::Set && p.stratum == Stratum::Set,
        "forms mismatch");
    REQ(c.type_a->kind == TypeKind::List && c.type_b->kind == TypeKind::List,
        "not a list equality");
    REQ(ctx_equal(c.ctx, p.ctx), "context mismatch");
    REQ(alpha_equal(c.type_a->a, p.type_a) && alpha_equal(c.type_b->a, p.type_b),
        "element sets mismatch");
    return ok();
  });

  // --- disjoint sum ---
  t.push_back(form2("F-plus", "B set; C set => B+C set", TypeKind::Plus, Stratum::Set));
  auto inj_rule = [](TermKind inj, int side) {
    return [inj, side](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(3));
      const Judgement& c = nd.C();
      REQ(is_of(c) && c.term_a->kind == inj && c.of_type->kind == TypeKind::Plus,
          "not a sum introduction");
      const Judgement& pb = nd.P(0);
      REQ(is_of(pb) && ctx_equal(pb.ctx, c.ctx), "member premise mismatch");
      REQ(is_wf(nd.P(1)) && is_wf(nd.P(2)), "set premises expected");
      REQ(alpha_equal(nd.P(1).type_a, c.of_type->a) &&
              alpha_equal(nd.P(2).type_a, c.of_type->b),
          "component sets mismatch");
      REQ(alpha_equal(pb.of_type, side == 0 ? c.of_type->a : c.of_type->b),
          "injection source mismatch");
      REQ(alpha_equal(c.term_a->args[0], pb.term_a), "subject mismatch");
      return ok();
    };
  };
  add("I1-plus", "b in B; B set; C set => inl(b) in B+C", inj_rule(TermKind::Inl, 0));
  add("I2-plus", "c in C; B set; C set => inr(c) in B+C", inj_rule(TermKind::Inr, 1));
  struct ElPlusParts {
    TypeExpr motive;
    std::string z;
    Context extL, extR;
    Term branchL, branchR;
  };
  auto parse_elplus = [](const Node& nd, const Judgement& c, const TypeExpr& sum_ty,
                         std::size_t i_motive, std::size_t i_l, std::size_t i_r,
                         ElPlusParts& out) -> Err {
    const Judgement& pM = nd.P(i_motive);
    const Judgement& pl = nd.P(i_l);
    const Judgement& pr = nd.P(i_r);
    REQ(is_wf(pM) && is_of(pl) && is_of(pr), "premise forms mismatch");
    Context extM;
    REQ(ctx_extends(pM.ctx, c.ctx, extM) && extM.size() == 1 &&
            alpha_equal(extM[0].second, sum_ty),
        "motive context mismatch");
    out.motive = pM.type_a;
    out.z = extM[0].first;
    REQ(ctx_extends(pl.ctx, c.ctx, out.extL) && out.extL.size() == 1 &&
            alpha_equal(out.extL[0].second, sum_ty->a),
        "left branch context mismatch");
    REQ(ctx_extends(pr.ctx, c.ctx, out.extR) && out.extR.size() == 1 &&
            alpha_equal(out.extR[0].second, sum_ty->b),
        "right branch context mismatch");
    Term inl_x = syntax::t_node(TermKind::Inl, {syntax::t_var(out.extL[0].first)});
    Term inr_y = syntax::t_node(TermKind::Inr, {syntax::t_var(out.extR[0].first)});
    REQ(alpha_equal(pl.of_type, substitute(out.motive, out.z, inl_x)),
        "left branch type mismatch");
    REQ(alpha_equal(pr.of_type, substitute(out.motive, out.z, inr_y)),
        "right branch type mismatch");
    out.branchL = pl.term_a;
    out.branchR = pr.term_a;
    return ok();
  };
  auto elplus_term = [](const Term& scrut, const ElPlusParts& e) {
    return syntax::t_node(TermKind::ElPlus, {scrut},
                          {Branch{{e.extL[0].first}, e.branchL},
                           Branch{{e.extR[0].first}, e.branchR}});
  };
  add("E-plus", "A col [G,z:B+C]; w in B+C; aB in A(inl x) [G,x:B]; aC in A(inr y) [G,y:C] => elPlus(w,aB,aC) in A(w)",
      [parse_elplus, elplus_term](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(4));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ElPlus, "conclusion is not elPlus");
        const Judgement& pw = nd.P(1);
        REQ(is_of(pw) && pw.of_type->kind == TypeKind::Plus && ctx_equal(pw.ctx, c.ctx),
            "scrutinee premise mismatch");
        ElPlusParts e;
        CHECK(parse_elplus(nd, c, pw.of_type, 0, 2, 3, e));
        REQ(alpha_equal(c.term_a, elplus_term(pw.term_a, e)), "eliminator mismatch");
        REQ(alpha_equal(c.of_type, substitute(e.motive, e.z, pw.term_a)),
            "conclusion type must be A(w)");
        return ok();
      });
  auto cplus_rule = [parse_elplus, elplus_term](int side) {
    return [parse_elplus, elplus_term, side](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(4));
      const Judgement& c = nd.C();
      REQ(is_eq(c), "conclusion must be a term equality");
      const Judgement& pb = nd.P(1);
      REQ(is_of(pb) && ctx_equal(pb.ctx, c.ctx), "member premise mismatch");
      REQ(c.term_a->kind == TermKind::ElPlus, "left-hand side must be elPlus");
      const Term& scrut = c.term_a->args[0];
      REQ(scrut->kind == (side == 0 ? TermKind::Inl : TermKind::Inr),
          "scrutinee injection mismatch");
      TypeExpr sum_ty = nd.P(0).ctx.empty() ? nullptr : nd.P(0).ctx.back().second;
      REQ(sum_ty && sum_ty->kind == TypeKind::Plus, "motive context mismatch");
      REQ(alpha_equal(pb.of_type, side == 0 ? sum_ty->a : sum_ty->b),
          "member premise type mismatch");
      ElPlusParts e;
      CHECK(parse_elplus(nd, c, sum_ty, 0, 2, 3, e));
      Term inj = side == 0 ? syntax::t_node(TermKind::Inl, {pb.term_a})
                           : syntax::t_node(TermKind::Inr, {pb.term_a});
      REQ(alpha_equal(c.term_a, elplus_term(inj, e)), "left-hand side mismatch");
      const Term& br = side == 0 ? e.branchL : e.branchR;
      const std::string& v = side == 0 ? e.extL[0].first : e.extR[0].first;
      REQ(alpha_equal(c.term_b, substitute(br, v, pb.term_a)),
          "right-hand side is not the contracted branch");
      REQ(alpha_equal(c.of_type, substitute(e.motive, e.z, inj)),
          "conclusion type mismatch");
      return ok();
    };
  };
  add("C1-plus", "elPlus(inl b, aB, aC) = aB(b)", cplus_rule(0));
  add("C2-plus", "elPlus(inr c, aB, aC) = aC(c)", cplus_rule(1));
  t.push_back(eq2("eq-plus", "B=E set; C=D set => B+C=E+D set", TypeKind::Plus, Stratum::Set));

  // --- dependent products ---
  add("F-Pi", "C set [G,x:B]; B set => Pi(x:B)C set", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_wf(c) && c.stratum == Stratum::Set && c.type_a->kind == TypeKind::Pi,
        "conclusion is not a product formation");
    const Judgement& pc = nd.P(0);
    const Judgement& pb = nd.P(1);
    REQ(is_wf(pc) && pc.stratum == Stratum::Set, "body premise mismatch");
    REQ(is_wf(pb) && pb.stratum == Stratum::Set && ctx_equal(pb.ctx, c.ctx),
        "domain premise mismatch");
    REQ(alpha_equal(pb.type_a, c.type_a->a), "domain mismatch");
    Context ext;
    REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1 &&
            alpha_equal(ext[0].second, c.type_a->a),
        "body context mismatch");
    TypeExpr body = substitute(c.type_a->b, c.type_a->bound, syntax::t_var(ext[0].first));
    REQ(alpha_equal(body, pc.type_a), "body mismatch");
    return ok();
  });
  add("I-Pi", "c in C [G,x:B]; C set [G,x:B]; B set => lam x.c in Pi(x:B)C",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::Lam && c.of_type->kind == TypeKind::Pi,
            "conclusion is not a lambda introduction");
        const Judgement& pc = nd.P(0);
        const Judgement& pC = nd.P(1);
        const Judgement& pB = nd.P(2);
        REQ(is_of(pc) && is_wf(pC) && is_wf(pB), "premise forms mismatch");
        REQ(ctx_equal(pB.ctx, c.ctx) && alpha_equal(pB.type_a, c.of_type->a),
            "domain premise mismatch");
        Context ext;
        REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1 &&
                alpha_equal(ext[0].second, c.of_type->a),
            "body premise context mismatch");
        const std::string& x = ext[0].first;
        Term lam_expected = syntax::t_node(TermKind::Lam, {}, {Branch{{x}, pc.term_a}});
        REQ(alpha_equal(c.term_a, lam_expected), "lambda body mismatch");
        REQ(alpha_equal(substitute(c.of_type->b, c.of_type->bound, syntax::t_var(x)),
                        pc.of_type),
            "body type mismatch");
        Context extC;
        REQ(ctx_extends(pC.ctx, c.ctx, extC) && extC.size() == 1, "family premise mismatch");
        return ok();
      });
  auto e_pi = [](bool modified) {
    return [modified](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(modified ? 4 : 2));
      const Judgement& c = nd.C();
      REQ(is_of(c) && c.term_a->kind == TermKind::Ap, "conclusion is not an application");
      std::size_t ib = modified ? 2 : 0, if_ = modified ? 3 : 1;
      const Judgement& pb = nd.P(ib);
      const Judgement& pf = nd.P(if_);
      REQ(is_of(pb) && is_of(pf) && ctx_equal(pb.ctx, c.ctx) && ctx_equal(pf.ctx, c.ctx),
          "premise forms mismatch");
      REQ(pf.of_type->kind == TypeKind::Pi, "function premise is not of product type");
      REQ(alpha_equal(pb.of_type, pf.of_type->a), "argument type mismatch");
      REQ(alpha_equal(c.term_a->args[0], pf.term_a) &&
              alpha_equal(c.term_a->args[1], pb.term_a),
          "application parts mismatch");
      REQ(alpha_equal(c.of_type,
                      substitute(pf.of_type->b, pf.of_type->bound, pb.term_a)),
          "conclusion type must be C(b)");
      if (modified) {
        REQ(is_wf(nd.P(0)) && is_wf(nd.P(1)), "typing premises expected");
        REQ(alpha_equal(nd.P(1).type_a, c.of_type), "C(b) premise mismatch");
      }
      return ok();
    };
  };
  add("E-Pi", "b in B; f in Pi(x:B)C => ap(f,b) in C(b)", e_pi(false));
  add("E-Pi_m", "C set [x:B]; C(b) set; b in B; f in Pi => ap(f,b) in C(b)", e_pi(true));
  add("bC-Pi", "b in B; c in C [G,x:B]; C set [G,x:B]; B set => ap(lam x.c, b)=c(b) in C(b)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(4));
        const Judgement& c = nd.C();
        REQ(is_eq(c) && c.term_a->kind == TermKind::Ap, "conclusion mismatch");
        const Judgement& pb = nd.P(0);
        const Judgement& pc = nd.P(1);
        REQ(is_of(pb) && ctx_equal(pb.ctx, c.ctx), "argument premise mismatch");
        REQ(is_of(pc), "body premise mismatch");
        Context ext;
        REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1, "body context mismatch");
        const std::string& x = ext[0].first;
        REQ(alpha_equal(pb.of_type, ext[0].second), "argument type mismatch");
        Term lam_t = syntax::t_node(TermKind::Lam, {}, {Branch{{x}, pc.term_a}});
        Term lhs = syntax::t_node(TermKind::Ap, {lam_t, pb.term_a});
        REQ(alpha_equal(c.term_a, lhs), "left-hand side mismatch");
        REQ(alpha_equal(c.term_b, substitute(pc.term_a, x, pb.term_a)),
            "right-hand side is not the contraction");
        REQ(alpha_equal(c.of_type, substitute(pc.of_type, x, pb.term_a)),
            "conclusion type mismatch");
        return ok();
      });

  add("F-Sig-set", "C set [G,x:B]; B set => Sig(x:B)C set", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_wf(c) && c.stratum == Stratum::Set && c.type_a->kind == TypeKind::Sigma,
        "conclusion is not a Sigma set formation");
    const Judgement& pc = nd.P(0);
    const Judgement& pb = nd.P(1);
    REQ(is_wf(pc) && pc.stratum == Stratum::Set && is_wf(pb) &&
            pb.stratum == Stratum::Set && ctx_equal(pb.ctx, c.ctx),
        "premise forms mismatch");
    REQ(alpha_equal(pb.type_a, c.type_a->a), "domain mismatch");
    Context ext;
    REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1 &&
            alpha_equal(ext[0].second, c.type_a->a),
        "body context mismatch");
    REQ(alpha_equal(substitute(c.type_a->b, c.type_a->bound, syntax::t_var(ext[0].first)),
                    pc.type_a),
        "body mismatch");
    return ok();
  });
  t.push_back(eq_binder("eq-Sig-set", "C=D set [x:B]; B=E set => Sig", TypeKind::Sigma,
                        Stratum::Set));
  t.push_back(eq_binder("eq-Pi-set", "C=D set [x:B]; B=E set => Pi", TypeKind::Pi,
                        Stratum::Set));
  return t;
}

// --- propositions and the code collections ---------------------------------

std::vector<RuleSchema> build_table_part3() {
  std::vector<RuleSchema> t;
  auto add = [&](const char* name, const char* display, auto fn) {
    t.push_back(RuleSchema{name, display, fn});
  };

  // Falsum.
  t.push_back(leaf_type("F-Fs", "Bot prop", TypeKind::Bot, Stratum::Prop));
  add("E-Fs", "a in Bot; phi prop => r0(a) in phi", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_of(c) && c.term_a->kind == TermKind::R0, "conclusion is not a falsum elimination");
    const Judgement& pa = nd.P(0);
    const Judgement& pp = nd.P(1);
    REQ(is_of(pa) && pa.of_type->kind == TypeKind::Bot && ctx_equal(pa.ctx, c.ctx),
        "absurdity premise mismatch");
    REQ(is_wf(pp) && ctx_equal(pp.ctx, c.ctx) && alpha_equal(pp.type_a, c.of_type),
        "target premise mismatch");
    REQ(alpha_equal(c.term_a->args[0], pa.term_a), "subject mismatch");
    return ok();
  });

  // Disjunction.
  t.push_back(form2("F-or", "psi prop; alpha prop => psi\\/alpha prop", TypeKind::Or,
                    Stratum::Prop));
  auto or_inj = [](TermKind inj, int side) {
    return [inj, side](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(3));
      const Judgement& c = nd.C();
      REQ(is_of(c) && c.term_a->kind == inj && c.of_type->kind == TypeKind::Or,
          "not a disjunction introduction");
      const Judgement& pb = nd.P(0);
      REQ(is_of(pb) && ctx_equal(pb.ctx, c.ctx), "member premise mismatch");
      REQ(is_wf(nd.P(1)) && is_wf(nd.P(2)), "proposition premises expected");
      REQ(alpha_equal(nd.P(1).type_a, c.of_type->a) &&
              alpha_equal(nd.P(2).type_a, c.of_type->b),
          "disjunct mismatch");
      REQ(alpha_equal(pb.of_type, side == 0 ? c.of_type->a : c.of_type->b),
          "injection source mismatch");
      REQ(alpha_equal(c.term_a->args[0], pb.term_a), "subject mismatch");
      return ok();
    };
  };
  add("I1-or", "b in psi => inlOr(b) in psi\\/alpha", or_inj(TermKind::InlOr, 0));
  add("I2-or", "c in alpha => inrOr(c) in psi\\/alpha", or_inj(TermKind::InrOr, 1));
  struct OrParts {
    Context extL, extR;
    Term branchL, branchR;
  };
  auto parse_or = [](const Node& nd, const Judgement& c, const TypeExpr& or_ty,
                     const TypeExpr& target, std::size_t i_l, std::size_t i_r,
                     OrParts& out) -> Err {
    const Judgement& pl = nd.P(i_l);
    const Judgement& pr = nd.P(i_r);
    REQ(is_of(pl) && is_of(pr), "branch premises must be term judgements");
    REQ(ctx_extends(pl.ctx, c.ctx, out.extL) && out.extL.size() == 1 &&
            alpha_equal(out.extL[0].second, or_ty->a),
        "left branch context mismatch");
    REQ(ctx_extends(pr.ctx, c.ctx, out.extR) && out.extR.size() == 1 &&
            alpha_equal(out.extR[0].second, or_ty->b),
        "right branch context mismatch");
    REQ(alpha_equal(pl.of_type, target) && alpha_equal(pr.of_type, target),
        "branch targets mismatch");
    out.branchL = pl.term_a;
    out.branchR = pr.term_a;
    return ok();
  };
  auto elor_term = [](const Term& scrut, const OrParts& e) {
    return syntax::t_node(TermKind::ElOr, {scrut},
                          {Branch{{e.extL[0].first}, e.branchL},
                           Branch{{e.extR[0].first}, e.branchR}});
  };
  add("E-or", "phi prop; w in psi\\/alpha; branches => elOr(w,aPsi,aAlpha) in phi",
      [parse_or, elor_term](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(4));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ElOr, "conclusion is not elOr");
        const Judgement& pphi = nd.P(0);
        const Judgement& pw = nd.P(1);
        REQ(is_wf(pphi) && ctx_equal(pphi.ctx, c.ctx) &&
                alpha_equal(pphi.type_a, c.of_type),
            "target premise mismatch");
        REQ(is_of(pw) && pw.of_type->kind == TypeKind::Or && ctx_equal(pw.ctx, c.ctx),
            "scrutinee premise mismatch");
        OrParts e;
        CHECK(parse_or(nd, c, pw.of_type, c.of_type, 2, 3, e));
        REQ(alpha_equal(c.term_a, elor_term(pw.term_a, e)), "eliminator mismatch");
        return ok();
      });
  auto c_or = [parse_or, elor_term](int side) {
    return [parse_or, elor_term, side](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(6));
      const Judgement& c = nd.C();
      REQ(is_eq(c) && c.term_a->kind == TermKind::ElOr, "conclusion mismatch");
      const Judgement& pphi = nd.P(0);
      const Judgement& ppsi = nd.P(1);
      const Judgement& palpha = nd.P(2);
      const Judgement& pb = nd.P(3);
      REQ(is_wf(pphi) && is_wf(ppsi) && is_wf(palpha), "proposition premises expected");
      REQ(alpha_equal(pphi.type_a, c.of_type), "target mismatch");
      TypeExpr or_ty = syntax::ty_bin(TypeKind::Or, ppsi.type_a, palpha.type_a);
      REQ(is_of(pb) && ctx_equal(pb.ctx, c.ctx), "member premise mismatch");
      REQ(alpha_equal(pb.of_type, side == 0 ? ppsi.type_a : palpha.type_a),
          "member premise type mismatch");
      OrParts e;
      CHECK(parse_or(nd, c, or_ty, c.of_type, 4, 5, e));
      Term inj = side == 0 ? syntax::t_node(TermKind::InlOr, {pb.term_a})
                           : syntax::t_node(TermKind::InrOr, {pb.term_a});
      REQ(alpha_equal(c.term_a, elor_term(inj, e)), "left-hand side mismatch");
      const Term& br = side == 0 ? e.branchL : e.branchR;
      const std::string& v = side == 0 ? e.extL[0].first : e.extR[0].first;
      REQ(alpha_equal(c.term_b, substitute(br, v, pb.term_a)),
          "right-hand side is not the contracted branch");
      return ok();
    };
  };
  add("C1-or", "elOr(inlOr b, ...) = aPsi(b) in phi", c_or(0));
  add("C2-or", "elOr(inrOr c, ...) = aAlpha(c) in phi", c_or(1));
  t.push_back(eq2("eq-or", "psi=a prop; phi=b prop => or-eq", TypeKind::Or, Stratum::Prop));

  // Conjunction.
  t.push_back(form2("F-and", "psi prop; alpha prop => psi/\\alpha prop", TypeKind::And,
                    Stratum::Prop));
  add("I-and", "b in psi; c in alpha; psi prop; alpha prop => <b,c> in psi/\\alpha",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(4));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::PairAnd &&
                c.of_type->kind == TypeKind::And,
            "not a conjunction introduction");
        const Judgement& pb = nd.P(0);
        const Judgement& pc = nd.P(1);
        REQ(is_of(pb) && is_of(pc) && ctx_equal(pb.ctx, c.ctx) && ctx_equal(pc.ctx, c.ctx),
            "member premises mismatch");
        REQ(alpha_equal(pb.of_type, c.of_type->a) && alpha_equal(pc.of_type, c.of_type->b),
            "conjunct mismatch");
        REQ(is_wf(nd.P(2)) && is_wf(nd.P(3)), "proposition premises expected");
        REQ(alpha_equal(c.term_a->args[0], pb.term_a) &&
                alpha_equal(c.term_a->args[1], pc.term_a),
            "pair parts mismatch");
        return ok();
      });
  auto e_and = [](TermKind proj, int side) {
    return [proj, side](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(1));
      const Judgement& c = nd.C();
      const Judgement& p = nd.P(0);
      REQ(is_of(c) && is_of(p) && c.term_a->kind == proj, "not a projection");
      REQ(p.of_type->kind == TypeKind::And && ctx_equal(c.ctx, p.ctx), "premise mismatch");
      REQ(alpha_equal(c.term_a->args[0], p.term_a), "subject mismatch");
      REQ(alpha_equal(c.of_type, side == 0 ? p.of_type->a : p.of_type->b),
          "projection type mismatch");
      return ok();
    };
  };
  add("E1-and", "d in psi/\\alpha => pi1And(d) in psi", e_and(TermKind::Pi1And, 0));
  add("E2-and", "d in psi/\\alpha => pi2And(d) in alpha", e_and(TermKind::Pi2And, 1));
  auto bc_and = [](TermKind proj, int side) {
    return [proj, side](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(4));
      const Judgement& c = nd.C();
      REQ(is_eq(c) && c.term_a->kind == proj, "conclusion mismatch");
      const Judgement& pb = nd.P(0);
      const Judgement& pc = nd.P(1);
      REQ(is_of(pb) && is_of(pc), "member premises expected");
      Term pair_t = syntax::t_node(TermKind::PairAnd, {pb.term_a, pc.term_a});
      REQ(alpha_equal(c.term_a->args[0], pair_t), "left-hand side mismatch");
      REQ(alpha_equal(c.term_b, side == 0 ? pb.term_a : pc.term_a),
          "right-hand side mismatch");
      REQ(alpha_equal(c.of_type, side == 0 ? pb.of_type : pc.of_type),
          "conclusion type mismatch");
      return ok();
    };
  };
  add("b1C-and", "pi1And(<b,c>) = b in psi", bc_and(TermKind::Pi1And, 0));
  add("b2C-and", "pi2And(<b,c>) = c in alpha", bc_and(TermKind::Pi2And, 1));
  t.push_back(eq2("eq-and", "congruence for /\\", TypeKind::And, Stratum::Prop));

  // Implication.
  t.push_back(form2("F-imp", "psi prop; alpha prop => psi->alpha prop", TypeKind::Imp,
                    Stratum::Prop));
  add("I-imp", "c in alpha [G,x:psi]; psi prop; alpha prop => lamImp x.c in psi->alpha",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::LamImp &&
                c.of_type->kind == TypeKind::Imp,
            "not an implication introduction");
        const Judgement& pc = nd.P(0);
        REQ(is_of(pc), "body premise expected");
        Context ext;
        REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1 &&
                alpha_equal(ext[0].second, c.of_type->a),
            "body context mismatch");
        REQ(alpha_equal(pc.of_type, c.of_type->b), "body target mismatch");
        Term lam_t = syntax::t_node(TermKind::LamImp, {},
                                    {Branch{{ext[0].first}, pc.term_a}});
        REQ(alpha_equal(c.term_a, lam_t), "lambda mismatch");
        REQ(is_wf(nd.P(1)) && is_wf(nd.P(2)), "proposition premises expected");
        return ok();
      });
  add("E-imp", "b in psi; f in psi->alpha => apImp(f,b) in alpha",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(2));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ApImp, "not an implication elimination");
        const Judgement& pb = nd.P(0);
        const Judgement& pf = nd.P(1);
        REQ(is_of(pb) && is_of(pf) && pf.of_type->kind == TypeKind::Imp,
            "premise forms mismatch");
        REQ(ctx_equal(pb.ctx, c.ctx) && ctx_equal(pf.ctx, c.ctx), "context mismatch");
        REQ(alpha_equal(pb.of_type, pf.of_type->a), "argument type mismatch");
        REQ(alpha_equal(c.of_type, pf.of_type->b), "conclusion type mismatch");
        REQ(alpha_equal(c.term_a->args[0], pf.term_a) &&
                alpha_equal(c.term_a->args[1], pb.term_a),
            "application parts mismatch");
        return ok();
      });
  add("bC-imp", "apImp(lamImp x.c, b) = c(b) in alpha", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(4));
    const Judgement& c = nd.C();
    REQ(is_eq(c) && c.term_a->kind == TermKind::ApImp, "conclusion mismatch");
    const Judgement& pb = nd.P(0);
    const Judgement& pc = nd.P(1);
    REQ(is_of(pb) && is_of(pc), "member premises expected");
    Context ext;
    REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1, "body context mismatch");
    const std::string& x = ext[0].first;
    Term lam_t = syntax::t_node(TermKind::LamImp, {}, {Branch{{x}, pc.term_a}});
    REQ(alpha_equal(c.term_a,
                    syntax::t_node(TermKind::ApImp, {lam_t, pb.term_a})),
        "left-hand side mismatch");
    REQ(alpha_equal(c.term_b, substitute(pc.term_a, x, pb.term_a)),
        "right-hand side mismatch");
    REQ(alpha_equal(c.of_type, pc.of_type), "conclusion type mismatch");
    return ok();
  });
  t.push_back(eq2("eq-imp", "congruence for ->", TypeKind::Imp, Stratum::Prop));

  // Existential quantification.
  auto f_quant = [](TypeKind k, bool modified) {
    return [k, modified](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(modified ? 2 : 1));
      const Judgement& c = nd.C();
      REQ(is_wf(c) && c.stratum == Stratum::Prop && c.type_a->kind == k,
          "conclusion is not the quantifier formation");
      std::size_t ib = modified ? 1 : 0;
      const Judgement& pbody = nd.P(ib);
      REQ(is_wf(pbody) && pbody.stratum == Stratum::Prop, "body premise mismatch");
      Context ext;
      REQ(ctx_extends(pbody.ctx, c.ctx, ext) && ext.size() == 1 &&
              alpha_equal(ext[0].second, c.type_a->a),
          "body context mismatch");
      REQ(alpha_equal(substitute(c.type_a->b, c.type_a->bound, syntax::t_var(ext[0].first)),
                      pbody.type_a),
          "body mismatch");
      if (modified) {
        const Judgement& pdom = nd.P(0);
        REQ(is_wf(pdom) && pdom.stratum == Stratum::Col && ctx_equal(pdom.ctx, c.ctx),
            "domain premise mismatch");
        REQ(alpha_equal(pdom.type_a, c.type_a->a), "domain mismatch");
      }
      return ok();
    };
  };
  add("F-ex", "alpha prop [G,x:B] => Ex(x:B)alpha prop", f_quant(TypeKind::Exists, false));
  add("F-ex_m", "B col; alpha prop [G,x:B] => Ex(x:B)alpha prop",
      f_quant(TypeKind::Exists, true));
  add("I-ex", "b in B; c in alpha(b); alpha prop [G,x:B] => pairEx(b,c) in Ex",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::PairEx &&
                c.of_type->kind == TypeKind::Exists,
            "not an existential introduction");
        const Judgement& pb = nd.P(0);
        const Judgement& pc = nd.P(1);
        REQ(is_of(pb) && is_of(pc) && ctx_equal(pb.ctx, c.ctx) && ctx_equal(pc.ctx, c.ctx),
            "member premises mismatch");
        REQ(alpha_equal(pb.of_type, c.of_type->a), "witness type mismatch");
        REQ(alpha_equal(pc.of_type,
                        substitute(c.of_type->b, c.of_type->bound, pb.term_a)),
            "proof type mismatch");
        REQ(alpha_equal(c.term_a->args[0], pb.term_a) &&
                alpha_equal(c.term_a->args[1], pc.term_a),
            "pair parts mismatch");
        REQ(is_wf(nd.P(2)), "body premise expected");
        return ok();
      });
  add("E-ex", "phi prop; d in Ex(x:B)alpha; m in phi [G,x:B,y:alpha] => elEx(d,m) in phi",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ElEx, "conclusion is not elEx");
        const Judgement& pphi = nd.P(0);
        const Judgement& pd = nd.P(1);
        const Judgement& pm = nd.P(2);
        REQ(is_wf(pphi) && alpha_equal(pphi.type_a, c.of_type) &&
                ctx_equal(pphi.ctx, c.ctx),
            "target premise mismatch");
        REQ(is_of(pd) && pd.of_type->kind == TypeKind::Exists && ctx_equal(pd.ctx, c.ctx),
            "scrutinee premise mismatch");
        Context ext;
        REQ(is_of(pm) && ctx_extends(pm.ctx, c.ctx, ext) && ext.size() == 2,
            "branch context mismatch");
        REQ(alpha_equal(ext[0].second, pd.of_type->a), "branch witness type mismatch");
        REQ(alpha_equal(ext[1].second,
                        substitute(pd.of_type->b, pd.of_type->bound,
                                   syntax::t_var(ext[0].first))),
            "branch proof type mismatch");
        REQ(alpha_equal(pm.of_type, c.of_type), "branch target mismatch");
        Term expected = syntax::t_node(TermKind::ElEx, {pd.term_a},
                                       {Branch{{ext[0].first, ext[1].first}, pm.term_a}});
        REQ(alpha_equal(c.term_a, expected), "eliminator mismatch");
        return ok();
      });
  add("C-ex", "phi prop; alpha prop [x:B]; b in B; c in alpha(b); m-branch => elEx(pairEx(b,c),m)=m(b,c)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(5));
        const Judgement& c = nd.C();
        REQ(is_eq(c) && c.term_a->kind == TermKind::ElEx, "conclusion mismatch");
        const Judgement& pphi = nd.P(0);
        const Judgement& pb = nd.P(2);
        const Judgement& pc = nd.P(3);
        const Judgement& pm = nd.P(4);
        REQ(is_wf(pphi) && alpha_equal(pphi.type_a, c.of_type), "target mismatch");
        REQ(is_of(pb) && is_of(pc) && is_of(pm), "premise forms mismatch");
        Context ext;
        REQ(ctx_extends(pm.ctx, c.ctx, ext) && ext.size() == 2, "branch context mismatch");
        Term pair_t = syntax::t_node(TermKind::PairEx, {pb.term_a, pc.term_a});
        Term lhs = syntax::t_node(TermKind::ElEx, {pair_t},
                                  {Branch{{ext[0].first, ext[1].first}, pm.term_a}});
        REQ(alpha_equal(c.term_a, lhs), "left-hand side mismatch");
        Term rhs = substitute(substitute(pm.term_a, ext[0].first, pb.term_a),
                              ext[1].first, pc.term_a);
        REQ(alpha_equal(c.term_b, rhs), "right-hand side mismatch");
        return ok();
      });
  t.push_back(eq_binder("eq-ex", "congruence for Ex", TypeKind::Exists, Stratum::Prop, true));

  // Universal quantification.
  add("F-all", "alpha prop [G,x:B] => All(x:B)alpha prop", f_quant(TypeKind::Forall, false));
  add("F-all_m", "B col; alpha prop [G,x:B] => All(x:B)alpha prop",
      f_quant(TypeKind::Forall, true));
  add("I-all", "c in alpha [G,x:B]; alpha prop [G,x:B] => lamAll x.c in All(x:B)alpha",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(2));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::LamAll &&
                c.of_type->kind == TypeKind::Forall,
            "not a universal introduction");
        const Judgement& pc = nd.P(0);
        REQ(is_of(pc), "body premise expected");
        Context ext;
        REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1 &&
                alpha_equal(ext[0].second, c.of_type->a),
            "body context mismatch");
        const std::string& x = ext[0].first;
        REQ(alpha_equal(pc.of_type,
                        substitute(c.of_type->b, c.of_type->bound, syntax::t_var(x))),
            "body target mismatch");
        Term lam_t = syntax::t_node(TermKind::LamAll, {}, {Branch{{x}, pc.term_a}});
        REQ(alpha_equal(c.term_a, lam_t), "lambda mismatch");
        REQ(is_wf(nd.P(1)), "body proposition premise expected");
        return ok();
      });
  auto e_all = [](bool modified) {
    return [modified](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(modified ? 4 : 2));
      const Judgement& c = nd.C();
      REQ(is_of(c) && c.term_a->kind == TermKind::ApAll, "not a universal elimination");
      std::size_t ib = modified ? 2 : 0, if_ = modified ? 3 : 1;
      const Judgement& pb = nd.P(ib);
      const Judgement& pf = nd.P(if_);
      REQ(is_of(pb) && is_of(pf) && pf.of_type->kind == TypeKind::Forall,
          "premise forms mismatch");
      REQ(alpha_equal(pb.of_type, pf.of_type->a), "argument type mismatch");
      REQ(alpha_equal(c.term_a->args[0], pf.term_a) &&
              alpha_equal(c.term_a->args[1], pb.term_a),
          "application parts mismatch");
      REQ(alpha_equal(c.of_type,
                      substitute(pf.of_type->b, pf.of_type->bound, pb.term_a)),
          "conclusion type must be alpha(b)");
      if (modified) {
        REQ(is_wf(nd.P(0)) && is_wf(nd.P(1)), "typing premises expected");
        REQ(alpha_equal(nd.P(1).type_a, c.of_type), "alpha(b) premise mismatch");
      }
      return ok();
    };
  };
  add("E-all", "b in B; f in All(x:B)alpha => apAll(f,b) in alpha(b)", e_all(false));
  add("E-all_m", "alpha prop [x:B]; alpha(b) prop; b in B; f in All => apAll(f,b) in alpha(b)",
      e_all(true));
  add("bC-all", "apAll(lamAll x.c, b) = c(b) in alpha(b)", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(3));
    const Judgement& c = nd.C();
    REQ(is_eq(c) && c.term_a->kind == TermKind::ApAll, "conclusion mismatch");
    const Judgement& pb = nd.P(0);
    const Judgement& pc = nd.P(1);
    REQ(is_of(pb) && is_of(pc), "member premises expected");
    Context ext;
    REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1, "body context mismatch");
    const std::string& x = ext[0].first;
    Term lam_t = syntax::t_node(TermKind::LamAll, {}, {Branch{{x}, pc.term_a}});
    REQ(alpha_equal(c.term_a, syntax::t_node(TermKind::ApAll, {lam_t, pb.term_a})),
        "left-hand side mismatch");
    REQ(alpha_equal(c.term_b, substitute(pc.term_a, x, pb.term_a)),
        "right-hand side mismatch");
    REQ(alpha_equal(c.of_type, substitute(pc.of_type, x, pb.term_a)),
        "conclusion type mismatch");
    REQ(is_wf(nd.P(2)), "body proposition premise expected");
    return ok();
  });
  t.push_back(eq_binder("eq-all", "congruence for All", TypeKind::Forall, Stratum::Prop, true));

  // Propositional equality.
  add("F-Id", "A col; a in A; b in A => Id(A,a,b) prop", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(3));
    const Judgement& c = nd.C();
    REQ(is_wf(c) && c.stratum == Stratum::Prop && c.type_a->kind == TypeKind::Id,
        "conclusion is not an identity formation");
    const Judgement& pA = nd.P(0);
    const Judgement& pa = nd.P(1);
    const Judgement& pb = nd.P(2);
    REQ(is_wf(pA) && is_of(pa) && is_of(pb), "premise forms mismatch");
    REQ(ctx_equal(pA.ctx, c.ctx) && ctx_equal(pa.ctx, c.ctx) && ctx_equal(pb.ctx, c.ctx),
        "context mismatch");
    REQ(alpha_equal(pA.type_a, c.type_a->a), "carrier mismatch");
    REQ(alpha_equal(pa.of_type, c.type_a->a) && alpha_equal(pb.of_type, c.type_a->a),
        "endpoint types mismatch");
    REQ(alpha_equal(pa.term_a, c.type_a->t) && alpha_equal(pb.term_a, c.type_a->t2),
        "endpoints mismatch");
    return ok();
  });
  add("I-Id", "a in A => id(a) in Id(A,a,a)", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_of(c) && is_of(p) && c.term_a->kind == TermKind::IdIntro &&
            c.of_type->kind == TypeKind::Id,
        "not an identity introduction");
    REQ(ctx_equal(c.ctx, p.ctx), "context mismatch");
    REQ(alpha_equal(c.term_a->args[0], p.term_a), "subject mismatch");
    REQ(alpha_equal(c.of_type->a, p.of_type), "carrier mismatch");
    REQ(alpha_equal(c.of_type->t, p.term_a) && alpha_equal(c.of_type->t2, p.term_a),
        "endpoints must both be the subject");
    return ok();
  });
  add("E-Id", "alpha prop [x:A,y:A]; a in A; b in A; p in Id(A,a,b); c in alpha(x,x) [x:A] => elId(a,b,p,c) in alpha(a,b)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(5));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::ElId, "conclusion is not elId");
        const Judgement& palpha = nd.P(0);
        const Judgement& pa = nd.P(1);
        const Judgement& pb = nd.P(2);
        const Judgement& pp = nd.P(3);
        const Judgement& pc = nd.P(4);
        REQ(is_wf(palpha) && is_of(pa) && is_of(pb) && is_of(pp) && is_of(pc),
            "premise forms mismatch");
        Context ext2;
        REQ(ctx_extends(palpha.ctx, c.ctx, ext2) && ext2.size() == 2,
            "motive context mismatch");
        const std::string& x = ext2[0].first;
        const std::string& y = ext2[1].first;
        REQ(pp.of_type->kind == TypeKind::Id, "proof premise is not an identity");
        REQ(alpha_equal(pp.of_type->t, pa.term_a) && alpha_equal(pp.of_type->t2, pb.term_a),
            "identity endpoints mismatch");
        Context ext1;
        REQ(ctx_extends(pc.ctx, c.ctx, ext1) && ext1.size() == 1, "branch context mismatch");
        const std::string& w = ext1[0].first;
        TypeExpr diag = substitute(substitute(palpha.type_a, x, syntax::t_var(w)), y,
                                   syntax::t_var(w));
        REQ(alpha_equal(pc.of_type, diag), "branch type must be alpha(x,x)");
        Term expected = syntax::t_node(TermKind::ElId,
                                       {pa.term_a, pb.term_a, pp.term_a},
                                       {Branch{{w}, pc.term_a}});
        REQ(alpha_equal(c.term_a, expected), "eliminator mismatch");
        TypeExpr target = substitute(substitute(palpha.type_a, x, pa.term_a), y, pb.term_a);
        REQ(alpha_equal(c.of_type, target), "conclusion type must be alpha(a,b)");
        return ok();
      });
  add("C-Id", "alpha prop [x:A,y:A]; a in A; c-branch => elId(a,a,id(a),c)=c(a) in alpha(a,a)",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_eq(c) && c.term_a->kind == TermKind::ElId, "conclusion mismatch");
        const Judgement& palpha = nd.P(0);
        const Judgement& pa = nd.P(1);
        const Judgement& pc = nd.P(2);
        REQ(is_wf(palpha) && is_of(pa) && is_of(pc), "premise forms mismatch");
        Context ext2;
        REQ(ctx_extends(palpha.ctx, c.ctx, ext2) && ext2.size() == 2,
            "motive context mismatch");
        Context ext1;
        REQ(ctx_extends(pc.ctx, c.ctx, ext1) && ext1.size() == 1, "branch context mismatch");
        const std::string& w = ext1[0].first;
        Term lhs = syntax::t_node(
            TermKind::ElId,
            {pa.term_a, pa.term_a, syntax::t_node(TermKind::IdIntro, {pa.term_a})},
            {Branch{{w}, pc.term_a}});
        REQ(alpha_equal(c.term_a, lhs), "left-hand side mismatch");
        REQ(alpha_equal(c.term_b, substitute(pc.term_a, w, pa.term_a)),
            "right-hand side mismatch");
        TypeExpr target = substitute(
            substitute(palpha.type_a, ext2[0].first, pa.term_a), ext2[1].first, pa.term_a);
        REQ(alpha_equal(c.of_type, target), "conclusion type mismatch");
        return ok();
      });
  add("eq-Id", "A=E col; a=e in A; b=c in A => Id(A,a,b)=Id(E,e,c) prop",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_teq(c) && c.stratum == Stratum::Prop && c.type_a->kind == TypeKind::Id &&
                c.type_b->kind == TypeKind::Id,
            "conclusion is not an identity congruence");
        const Judgement& pA = nd.P(0);
        const Judgement& p1 = nd.P(1);
        const Judgement& p2 = nd.P(2);
        REQ(is_teq(pA) && is_eq(p1) && is_eq(p2), "premise forms mismatch");
        REQ(alpha_equal(pA.type_a, c.type_a->a) && alpha_equal(pA.type_b, c.type_b->a),
            "carriers mismatch");
        REQ(alpha_equal(p1.term_a, c.type_a->t) && alpha_equal(p1.term_b, c.type_b->t),
            "first endpoints mismatch");
        REQ(alpha_equal(p2.term_a, c.type_a->t2) && alpha_equal(p2.term_b, c.type_b->t2),
            "second endpoints mismatch");
        return ok();
      });

  // Collection of small propositions and its codes.
  t.push_back(leaf_type("F-Pr", "props col", TypeKind::PropS, Stratum::Col));
  add("T-Pr", "p in props => tau(p) props", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_wf(c) && c.stratum == Stratum::SmallProp && c.type_a->kind == TypeKind::Tau,
        "conclusion is not a decoding");
    REQ(is_of(p) && p.of_type->kind == TypeKind::PropS && ctx_equal(p.ctx, c.ctx),
        "premise mismatch");
    REQ(alpha_equal(c.type_a->t, p.term_a), "decoded code mismatch");
    return ok();
  });
  t.push_back(leaf_term("Pr1", "bothat in props", TermKind::HatBot, TypeKind::PropS));
  auto pr2 = [](TermKind k) {
    return [k](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(2));
      const Judgement& c = nd.C();
      REQ(is_of(c) && c.term_a->kind == k && c.of_type->kind == TypeKind::PropS,
          "not a code formation");
      for (int i = 0; i < 2; ++i) {
        REQ(is_of(nd.P(i)) && nd.P(i).of_type->kind == TypeKind::PropS &&
                ctx_equal(nd.P(i).ctx, c.ctx),
            "premise mismatch");
      }
      REQ(alpha_equal(c.term_a->args[0], nd.P(0).term_a) &&
              alpha_equal(c.term_a->args[1], nd.P(1).term_a),
          "code parts mismatch");
      return ok();
    };
  };
  add("Pr2", "p,q in props => orhat(p,q) in props", pr2(TermKind::HatOr));
  add("Pr3", "p,q in props => imphat(p,q) in props", pr2(TermKind::HatImp));
  add("Pr4", "p,q in props => andhat(p,q) in props", pr2(TermKind::HatAnd));
  auto pr_quant = [](TermKind k) {
    return [k](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(2));
      const Judgement& c = nd.C();
      REQ(is_of(c) && c.term_a->kind == k && c.of_type->kind == TypeKind::PropS,
          "not a quantified code formation");
      const Judgement& pp = nd.P(0);
      const Judgement& pB = nd.P(1);
      REQ(is_of(pp) && pp.of_type->kind == TypeKind::PropS, "body premise mismatch");
      REQ(is_wf(pB) && pB.stratum == Stratum::Set && ctx_equal(pB.ctx, c.ctx),
          "domain premise mismatch");
      REQ(alpha_equal(pB.type_a, c.term_a->type), "domain mismatch");
      Context ext;
      REQ(ctx_extends(pp.ctx, c.ctx, ext) && ext.size() == 1 &&
              alpha_equal(ext[0].second, c.term_a->type),
          "body context mismatch");
      Term body = substitute(c.term_a->branches[0].body,
                             c.term_a->branches[0].vars[0],
                             syntax::t_var(ext[0].first));
      REQ(alpha_equal(body, pp.term_a), "body mismatch");
      return ok();
    };
  };
  add("Pr5", "p in props [G,x:B]; B set => existshat(x:B)p in props",
      pr_quant(TermKind::HatExists));
  add("Pr6", "p in props [G,x:B]; B set => forallhat(x:B)p in props",
      pr_quant(TermKind::HatForall));
  add("Pr7", "A set; a in A; b in A => Idhat(A,a,b) in props",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(3));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::HatId &&
                c.of_type->kind == TypeKind::PropS,
            "not an identity code formation");
        const Judgement& pA = nd.P(0);
        const Judgement& pa = nd.P(1);
        const Judgement& pb = nd.P(2);
        REQ(is_wf(pA) && pA.stratum == Stratum::Set && is_of(pa) && is_of(pb),
            "premise forms mismatch");
        REQ(alpha_equal(pA.type_a, c.term_a->type), "carrier mismatch");
        REQ(alpha_equal(pa.of_type, c.term_a->type) &&
                alpha_equal(pb.of_type, c.term_a->type),
            "endpoint types mismatch");
        REQ(alpha_equal(pa.term_a, c.term_a->args[0]) &&
                alpha_equal(pb.term_a, c.term_a->args[1]),
            "endpoints mismatch");
        return ok();
      });

  // Definitional equalities of the decoding.
  add("eq-Pr1", "tau(bothat) = Bot props", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(0));
    const Judgement& c = nd.C();
    REQ(is_teq(c) && c.stratum == Stratum::SmallProp, "conclusion mismatch");
    REQ(c.type_a->kind == TypeKind::Tau && c.type_a->t->kind == TermKind::HatBot &&
            c.type_b->kind == TypeKind::Bot,
        "conclusion is not the falsum decoding");
    return ok();
  });
  auto eq_pr2 = [](TermKind code_k, TypeKind ty_k) {
    return [code_k, ty_k](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(2));
      const Judgement& c = nd.C();
      REQ(is_teq(c) && c.stratum == Stratum::SmallProp, "conclusion mismatch");
      REQ(c.type_a->kind == TypeKind::Tau && c.type_a->t->kind == code_k &&
              c.type_b->kind == ty_k,
          "conclusion is not the expected decoding");
      for (int i = 0; i < 2; ++i)
        REQ(is_of(nd.P(i)) && nd.P(i).of_type->kind == TypeKind::PropS,
            "premise mismatch");
      REQ(alpha_equal(c.type_a->t->args[0], nd.P(0).term_a) &&
              alpha_equal(c.type_a->t->args[1], nd.P(1).term_a),
          "code parts mismatch");
      REQ(c.type_b->a->kind == TypeKind::Tau && c.type_b->b->kind == TypeKind::Tau,
          "decoded sides must be decodings");
      REQ(alpha_equal(c.type_b->a->t, nd.P(0).term_a) &&
              alpha_equal(c.type_b->b->t, nd.P(1).term_a),
          "decoded parts mismatch");
      return ok();
    };
  };
  add("eq-Pr2", "tau(orhat(p,q)) = tau(p)\\/tau(q) props", eq_pr2(TermKind::HatOr, TypeKind::Or));
  add("eq-Pr3", "tau(imphat(p,q)) = tau(p)->tau(q) props", eq_pr2(TermKind::HatImp, TypeKind::Imp));
  add("eq-Pr4", "tau(andhat(p,q)) = tau(p)/\\tau(q) props", eq_pr2(TermKind::HatAnd, TypeKind::And));
  auto eq_pr_quant = [](TermKind code_k, TypeKind ty_k) {
    return [code_k, ty_k](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(2));
      const Judgement& c = nd.C();
      REQ(is_teq(c) && c.stratum == Stratum::SmallProp, "conclusion mismatch");
      REQ(c.type_a->kind == TypeKind::Tau && c.type_a->t->kind == code_k &&
              c.type_b->kind == ty_k,
          "conclusion is not the expected decoding");
      const Judgement& pp = nd.P(0);
      const Judgement& pB = nd.P(1);
      REQ(is_of(pp) && pp.of_type->kind == TypeKind::PropS, "body premise mismatch");
      REQ(is_wf(pB) && pB.stratum == Stratum::Set, "domain premise mismatch");
      const Term& code = c.type_a->t;
      REQ(alpha_equal(pB.type_a, code->type) && alpha_equal(c.type_b->a, code->type),
          "domains mismatch");
      REQ(c.type_b->b->kind == TypeKind::Tau, "decoded body must be a decoding");
      Term body_decoded = substitute(c.type_b->b->t, c.type_b->bound,
                                     syntax::t_var(code->branches[0].vars[0]));
      REQ(alpha_equal(body_decoded, code->branches[0].body), "bodies mismatch");
      Context ext;
      REQ(ctx_extends(pp.ctx, c.ctx, ext) && ext.size() == 1, "body context mismatch");
      return ok();
    };
  };
  add("eq-Pr5", "tau(existshat(x:B)p) = Ex(x:B)tau(p) props",
      eq_pr_quant(TermKind::HatExists, TypeKind::Exists));
  add("eq-Pr6", "tau(forallhat(x:B)p) = All(x:B)tau(p) props",
      eq_pr_quant(TermKind::HatForall, TypeKind::Forall));
  add("eq-Pr7", "tau(Idhat(A,a,b)) = Id(A,a,b) props", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(3));
    const Judgement& c = nd.C();
    REQ(is_teq(c) && c.stratum == Stratum::SmallProp, "conclusion mismatch");
    REQ(c.type_a->kind == TypeKind::Tau && c.type_a->t->kind == TermKind::HatId &&
            c.type_b->kind == TypeKind::Id,
        "conclusion is not the identity decoding");
    const Term& code = c.type_a->t;
    REQ(alpha_equal(code->type, c.type_b->a), "carriers mismatch");
    REQ(alpha_equal(code->args[0], c.type_b->t) && alpha_equal(code->args[1], c.type_b->t2),
        "endpoints mismatch");
    REQ(is_wf(nd.P(0)) && is_of(nd.P(1)) && is_of(nd.P(2)), "premise forms mismatch");
    REQ(alpha_equal(nd.P(0).type_a, code->type), "carrier premise mismatch");
    return ok();
  });

  // Collection of set codes. There is deliberately no elimination or
  // conversion rule for Set.
  t.push_back(leaf_type("F-Se", "Set col", TypeKind::SetUniverse, Stratum::Col));
  t.push_back(leaf_term("Se_e", "N0hat in Set", TermKind::HatN0, TypeKind::SetUniverse));
  t.push_back(leaf_term("Se_s", "N1hat in Set", TermKind::HatN1, TypeKind::SetUniverse));
  t.push_back(leaf_term("Se_n", "Nhat in Set", TermKind::HatN, TypeKind::SetUniverse));
  add("Se_l", "a in Set => Listhat(a) in Set", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_of(c) && is_of(p) && c.term_a->kind == TermKind::HatList &&
            c.of_type->kind == TypeKind::SetUniverse &&
            p.of_type->kind == TypeKind::SetUniverse,
        "not a list code formation");
    REQ(ctx_equal(c.ctx, p.ctx) && alpha_equal(c.term_a->args[0], p.term_a),
        "code part mismatch");
    return ok();
  });
  add("Se_u", "a,b in Set => plushat(a,b) in Set", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_of(c) && c.term_a->kind == TermKind::HatPlus &&
            c.of_type->kind == TypeKind::SetUniverse,
        "not a sum code formation");
    for (int i = 0; i < 2; ++i)
      REQ(is_of(nd.P(i)) && nd.P(i).of_type->kind == TypeKind::SetUniverse &&
              ctx_equal(nd.P(i).ctx, c.ctx),
          "premise mismatch");
    REQ(alpha_equal(c.term_a->args[0], nd.P(0).term_a) &&
            alpha_equal(c.term_a->args[1], nd.P(1).term_a),
        "code parts mismatch");
    return ok();
  });
  auto se_quant = [](TermKind k) {
    return [k](const DerivationNode& d) -> Err {
      Node nd{d};
      CHECK(nd.arity(2));
      const Judgement& c = nd.C();
      REQ(is_of(c) && c.term_a->kind == k && c.of_type->kind == TypeKind::SetUniverse,
          "not a quantified set code formation");
      const Judgement& pa = nd.P(0);
      const Judgement& pB = nd.P(1);
      REQ(is_of(pa) && pa.of_type->kind == TypeKind::SetUniverse, "body premise mismatch");
      REQ(is_wf(pB) && pB.stratum == Stratum::Set && ctx_equal(pB.ctx, c.ctx),
          "domain premise mismatch");
      REQ(alpha_equal(pB.type_a, c.term_a->type), "domain mismatch");
      Context ext;
      REQ(ctx_extends(pa.ctx, c.ctx, ext) && ext.size() == 1 &&
              alpha_equal(ext[0].second, c.term_a->type),
          "body context mismatch");
      Term body = substitute(c.term_a->branches[0].body, c.term_a->branches[0].vars[0],
                             syntax::t_var(ext[0].first));
      REQ(alpha_equal(body, pa.term_a), "body mismatch");
      return ok();
    };
  };
  add("Se_Sig", "a in Set [G,x:B]; B set => Sigmahat(x:B)a in Set",
      se_quant(TermKind::HatSigma));
  add("Se_Pi", "a in Set [G,x:B]; B set => Pihat(x:B)a in Set", se_quant(TermKind::HatPi));
  add("sp-i-p", "p in props => p in Set", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_of(c) && is_of(p), "forms mismatch");
    REQ(p.of_type->kind == TypeKind::PropS && c.of_type->kind == TypeKind::SetUniverse,
        "embedding types mismatch");
    REQ(ctx_equal(c.ctx, p.ctx) && alpha_equal(c.term_a, p.term_a), "subject mismatch");
    return ok();
  });

  // Function collections into props.
  add("F-Fun", "B set => B -> props col", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(1));
    const Judgement& c = nd.C();
    const Judgement& p = nd.P(0);
    REQ(is_wf(c) && c.stratum == Stratum::Col && c.type_a->kind == TypeKind::FunToPropS,
        "conclusion is not a propositional-function formation");
    REQ(is_wf(p) && p.stratum == Stratum::Set && ctx_equal(p.ctx, c.ctx),
        "domain premise mismatch");
    REQ(alpha_equal(c.type_a->a, p.type_a), "domain mismatch");
    return ok();
  });
  add("I-Fun", "c in props [G,x:B]; B set => lam x.c in B->props",
      [](const DerivationNode& d) -> Err {
        Node nd{d};
        CHECK(nd.arity(2));
        const Judgement& c = nd.C();
        REQ(is_of(c) && c.term_a->kind == TermKind::Lam &&
                c.of_type->kind == TypeKind::FunToPropS,
            "not a propositional-function introduction");
        const Judgement& pc = nd.P(0);
        const Judgement& pB = nd.P(1);
        REQ(is_of(pc) && pc.of_type->kind == TypeKind::PropS, "body premise mismatch");
        REQ(is_wf(pB) && pB.stratum == Stratum::Set && ctx_equal(pB.ctx, c.ctx) &&
                alpha_equal(pB.type_a, c.of_type->a),
            "domain premise mismatch");
        Context ext;
        REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1 &&
                alpha_equal(ext[0].second, c.of_type->a),
            "body context mismatch");
        Term lam_t = syntax::t_node(TermKind::Lam, {}, {Branch{{ext[0].first}, pc.term_a}});
        REQ(alpha_equal(c.term_a, lam_t), "lambda mismatch");
        return ok();
      });
  add("E-Fun", "b in B; f in B->props => ap(f,b) in props", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(2));
    const Judgement& c = nd.C();
    REQ(is_of(c) && c.term_a->kind == TermKind::Ap && c.of_type->kind == TypeKind::PropS,
        "not a propositional-function application");
    const Judgement& pb = nd.P(0);
    const Judgement& pf = nd.P(1);
    REQ(is_of(pb) && is_of(pf) && pf.of_type->kind == TypeKind::FunToPropS,
        "premise forms mismatch");
    REQ(alpha_equal(pb.of_type, pf.of_type->a), "argument type mismatch");
    REQ(alpha_equal(c.term_a->args[0], pf.term_a) &&
            alpha_equal(c.term_a->args[1], pb.term_a),
        "application parts mismatch");
    return ok();
  });
  add("bC-Fun", "ap(lam x.c, b) = c(b) in props", [](const DerivationNode& d) -> Err {
    Node nd{d};
    CHECK(nd.arity(3));
    const Judgement& c = nd.C();
    REQ(is_eq(c) && c.term_a->kind == TermKind::Ap && c.of_type->kind == TypeKind::PropS,
        "conclusion mismatch");
    const Judgement& pb = nd.P(0);
    const Judgement& pc = nd.P(1);
    REQ(is_of(pb) && is_of(pc) && pc.of_type->kind == TypeKind::PropS,
        "premise forms mismatch");
    Context ext;
    REQ(ctx_extends(pc.ctx, c.ctx, ext) && ext.size() == 1, "body context mismatch");
    const std::string& x = ext[0].first;
    Term lam_t = syntax::t_node(TermKind::Lam, {}, {Branch{{x}, pc.term_a}});
    REQ(alpha_equal(c.term_a, syntax::t_node(TermKind::Ap, {lam_t, pb.term_a})),
        "left-hand side mismatch");
    REQ(alpha_equal(c.term_b, substitute(pc.term_a, x, pb.term_a)),
        "right-hand side mismatch");
    REQ(is_wf(nd.P(2)) && nd.P(2).stratum == Stratum::Set, "domain premise expected");
    return ok();
  });

  return t;
}

}  // namespace

const std::vector<RuleSchema>& rule_table() {
  static const std::vector<RuleSchema> table = [] {
    std::vector<RuleSchema> t = build_table();
    for (auto& r : build_table_part2()) t.push_back(std::move(r));
    for (auto& r : build_table_part3()) t.push_back(std::move(r));
    return t;
  }();
  return table;
}

const RuleSchema* find_rule(const std::string& name) {
  for (const auto& r : rule_table())
    if (r.name == name) return &r;
  return nullptr;
}

std::string CheckError::to_string() const {
  std::string s = "at ";
  if (path.empty()) s += "root";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(path[i]);
  }
  s += " (" + rule + "): " + message;
  return s;
}

std::optional<CheckError> check_derivation(const DerivationNode& d) {
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    if (auto e = check_derivation(d.premises[i])) {
      e->path.insert(e->path.begin(), static_cast<int>(i));
      return e;
    }
  }
  const RuleSchema* r = find_rule(d.rule);
  if (!r) return CheckError{{}, d.rule, "unknown rule"};
  if (auto msg = r->check(d)) return CheckError{{}, d.rule, *msg};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Derivation text format

namespace {

struct SexpParser {
  std::string_view s;
  std::size_t at = 0;

  void skip() {
    while (at < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[at]))) { ++at; continue; }
      if (s[at] == ';') {  // comment to end of line
        while (at < s.size() && s[at] != '\n') ++at;
        continue;
      }
      break;
    }
  }

  [[noreturn]] void fail(const std::string& m) const {
    throw std::runtime_error("derivation parse error at offset " +
                             std::to_string(at) + ": " + m);
  }

  DerivationNode node() {
    skip();
    if (at >= s.size() || s[at] != '(') fail("expected '('");
    ++at;
    skip();
    std::size_t start = at;
    while (at < s.size() && !std::isspace(static_cast<unsigned char>(s[at])) &&
           s[at] != '(' && s[at] != ')')
      ++at;
    DerivationNode n;
    n.rule = std::string(s.substr(start, at - start));
    if (n.rule.empty()) fail("missing rule name");
    skip();
    if (at >= s.size() || s[at] != '"') fail("expected quoted statement");
    ++at;
    start = at;
    while (at < s.size() && s[at] != '"') ++at;
    if (at >= s.size()) fail("unterminated statement string");
    std::string stmt(s.substr(start, at - start));
    ++at;
    n.conclusion = parse_statement(stmt);
    skip();
    while (at < s.size() && s[at] == '(') {
      n.premises.push_back(node());
      skip();
    }
    if (at >= s.size() || s[at] != ')') fail("expected ')'");
    ++at;
    return n;
  }

  static Statement parse_statement(const std::string& text) {
    Statement st;
    std::istringstream is(text);
    std::string first;
    is >> first;
    if (first == "cont") {
      st.is_cont = true;
      std::string rest;
      std::getline(is, rest);
      // Reuse the judgement parser by wrapping the context in a dummy form.
      syntax::Judgement j = syntax::parse_judgement("N set " + rest);
      st.ctx = j.ctx;
      return st;
    }
    st.j = syntax::parse_judgement(text);
    return st;
  }
};

}  // namespace

DerivationNode parse_derivation(std::string_view text) {
  SexpParser p{text};
  DerivationNode n = p.node();
  p.skip();
  if (p.at != text.size())
    throw std::runtime_error("trailing input after derivation");
  return n;
}

std::vector<DerivationNode> parse_derivation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open derivation file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string all = buf.str();
  std::vector<DerivationNode> out;
  SexpParser p{all};
  p.skip();
  while (p.at < all.size()) {
    out.push_back(p.node());
    p.skip();
  }
  return out;
}

std::string to_string(const DerivationNode& d, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string stmt = d.conclusion.is_cont
                         ? "cont [...]"
                         : syntax::to_string(d.conclusion.j);
  std::string s = pad + "(" + d.rule + " \"" + stmt + "\"";
  if (d.premises.empty()) return s + ")";
  s += "\n";
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    s += to_string(d.premises[i], indent + 1);
    s += i + 1 < d.premises.size() ? "\n" : "";
  }
  return s + ")";
}

}  // namespace mtt::rules

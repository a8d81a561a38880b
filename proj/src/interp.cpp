#include "mtt/interp.hpp"

#include <stdexcept>

namespace mtt::interp {

using pca::Program;
using pca::PrimId;
using syntax::Term;
using syntax::TermKind;
using syntax::TypeKind;

namespace {

Program prim(PrimId p) { return pca::make_prim(p); }

Program apps(Program f, std::vector<Program> args) {
  return pca::make_apps(std::move(f), args);
}

Program konst(std::uint64_t v) { return pca::make_const(v); }

Program tag_pair(int tag, Program payload) {
  return apps(prim(PrimId::Pair), {konst(static_cast<std::uint64_t>(tag)),
                                   std::move(payload)});
}

struct Compiler {
  std::vector<std::string> scope;

  int index_of(const std::string& name) const {
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i] == name) return static_cast<int>(scope.size() - 1 - i);
    throw std::invalid_argument("interpret: variable '" + name + "' not in scope");
  }

  Program under(const std::vector<std::string>& vars, const Term& body) {
    for (const auto& v : vars) scope.push_back(v);
    Program b = go(body);
    scope.resize(scope.size() - vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) b = pca::make_lam(b);
    return b;
  }

  Program go(const Term& t) {
    switch (t->kind) {
      case TermKind::Var:
        return pca::make_var(index_of(t->name));
      case TermKind::Emp0:
      case TermKind::R0:
      case TermKind::Star:
      case TermKind::Zero:
      case TermKind::EpsList:
      case TermKind::IdIntro:
        return konst(0);
      case TermKind::ElN1:
        return go(t->args[1]);
      case TermKind::Succ:
        return pca::make_app(prim(PrimId::Succ), go(t->args[0]));
      case TermKind::ElN:
        return apps(prim(PrimId::Rec),
                    {go(t->args[1]),
                     under(t->branches[0].vars, t->branches[0].body),
                     go(t->args[0])});
      case TermKind::Lam: case TermKind::LamImp: case TermKind::LamAll:
        return under(t->branches[0].vars, t->branches[0].body);
      case TermKind::Ap: case TermKind::ApImp: case TermKind::ApAll:
        return pca::make_app(go(t->args[0]), go(t->args[1]));
      case TermKind::PairSigma: case TermKind::PairAnd: case TermKind::PairEx:
        return apps(prim(PrimId::Pair), {go(t->args[0]), go(t->args[1])});
      case TermKind::ElSigma: case TermKind::ElEx: {
        Program scrut = go(t->args[0]);
        return apps(under(t->branches[0].vars, t->branches[0].body),
                    {pca::make_app(prim(PrimId::P1), scrut),
                     pca::make_app(prim(PrimId::P2), scrut)});
      }
      case TermKind::Pi1And:
        return pca::make_app(prim(PrimId::P1), go(t->args[0]));
      case TermKind::Pi2And:
        return pca::make_app(prim(PrimId::P2), go(t->args[0]));
      case TermKind::Inl: case TermKind::InlOr:
        return apps(prim(PrimId::Pair), {konst(0), go(t->args[0])});
      case TermKind::Inr: case TermKind::InrOr:
        return apps(prim(PrimId::Pair), {konst(1), go(t->args[0])});
      case TermKind::ElPlus: case TermKind::ElOr: {
        Program scrut = go(t->args[0]);
        Program snd = pca::make_app(prim(PrimId::P2), scrut);
        return apps(prim(PrimId::Ite),
                    {pca::make_app(prim(PrimId::P1), scrut),
                     pca::make_app(under(t->branches[0].vars, t->branches[0].body), snd),
                     pca::make_app(under(t->branches[1].vars, t->branches[1].body), snd)});
      }
      case TermKind::Cons:
        return apps(prim(PrimId::Cnc), {go(t->args[0]), go(t->args[1])});
      case TermKind::ElList:
        return apps(prim(PrimId::ListRec),
                    {go(t->args[1]),
                     under(t->branches[0].vars, t->branches[0].body),
                     go(t->args[0])});
      case TermKind::ElId:
        return pca::make_app(under(t->branches[0].vars, t->branches[0].body),
                             go(t->args[0]));
      case TermKind::HatN0: return tag_pair(1, konst(0));
      case TermKind::HatN1: return tag_pair(1, konst(1));
      case TermKind::HatN: return tag_pair(1, konst(2));
      case TermKind::HatBot: return tag_pair(6, konst(0));
      case TermKind::HatPi: case TermKind::HatSigma:
      case TermKind::HatExists: case TermKind::HatForall: {
        int tag = t->kind == TermKind::HatPi ? 2
                  : t->kind == TermKind::HatSigma ? 3
                  : t->kind == TermKind::HatExists ? 10 : 11;
        Program dom = go(syntax::hat(t->type));
        Program fam = under(t->branches[0].vars, t->branches[0].body);
        return tag_pair(tag, apps(prim(PrimId::Pair), {dom, fam}));
      }
      case TermKind::HatPlus: case TermKind::HatAnd:
      case TermKind::HatOr: case TermKind::HatImp: {
        int tag = t->kind == TermKind::HatPlus ? 4
                  : t->kind == TermKind::HatAnd ? 7
                  : t->kind == TermKind::HatOr ? 8 : 9;
        return tag_pair(tag, apps(prim(PrimId::Pair),
                                  {go(t->args[0]), go(t->args[1])}));
      }
      case TermKind::HatList:
        return tag_pair(5, go(t->args[0]));
      case TermKind::HatId: {
        Program dom = go(syntax::hat(t->type));
        Program ends = apps(prim(PrimId::Pair), {go(t->args[0]), go(t->args[1])});
        return tag_pair(12, apps(prim(PrimId::Pair), {dom, ends}));
      }
    }
    throw std::logic_error("interpret: unhandled constructor");
  }
};

}  // namespace

Program interpret(const Term& t, const std::vector<std::string>& scope) {
  Compiler c{scope};
  return c.go(t);
}

Program interpret_in_context(const Term& t, const std::vector<std::string>& ctx_vars) {
  Program body = interpret(t, ctx_vars);
  for (std::size_t i = 0; i < ctx_vars.size(); ++i) body = pca::make_lam(body);
  return body;
}

Nat code_in_context(const Term& t, const std::vector<std::string>& ctx_vars) {
  return pca::encode(interpret_in_context(t, ctx_vars));
}

int set_code_tag(TypeKind k) {
  switch (k) {
    case TypeKind::N0: case TypeKind::N1: case TypeKind::N: return 1;
    case TypeKind::Pi: return 2;
    case TypeKind::Sigma: return 3;
    case TypeKind::Plus: return 4;
    case TypeKind::List: return 5;
    case TypeKind::Bot: return 6;
    case TypeKind::And: return 7;
    case TypeKind::Or: return 8;
    case TypeKind::Imp: return 9;
    case TypeKind::Exists: return 10;
    case TypeKind::Forall: return 11;
    case TypeKind::Id: return 12;
    default: return 0;
  }
}

bool small_prop_tag(int tag) { return tag > 5 && tag <= 12; }

// ---------------------------------------------------------------------------
// The 17 conversion facts

namespace {

using syntax::Branch;
using syntax::substitute;
using syntax::t_leaf;
using syntax::t_node;
using syntax::t_var;

Term el_n(Term t, Term t2, Term r) {
  return t_node(TermKind::ElN, {std::move(t), std::move(t2)},
                {Branch{{"y", "z"}, std::move(r)}});
}

Term el_list(Term t, Term t2, Term q) {
  return t_node(TermKind::ElList, {std::move(t), std::move(t2)},
                {Branch{{"y", "z", "u"}, std::move(q)}});
}

ConversionInstance plain(Term lhs, Term rhs) {
  return ConversionInstance{std::move(lhs), std::move(rhs), {}, {}};
}

std::vector<ConversionSchema> build_schemas() {
  std::vector<ConversionSchema> out;
  auto add = [&](std::string name, std::vector<std::vector<std::string>> scopes,
                 auto fn) {
    out.push_back(ConversionSchema{std::move(name), std::move(scopes), fn});
  };

  add("elN1-star", {{}},
      [](const std::vector<Term>& p) {
        return plain(t_node(TermKind::ElN1, {t_leaf(TermKind::Star), p[0]}), p[0]);
      });
  add("elN-zero", {{}, {"y", "z"}},
      [](const std::vector<Term>& p) {
        return plain(el_n(t_leaf(TermKind::Zero), p[0], p[1]), p[0]);
      });
  add("elN-succ", {{}, {}, {"y", "z"}},
      [](const std::vector<Term>& p) {
        Term lhs = el_n(t_node(TermKind::Succ, {p[0]}), p[1], p[2]);
        return ConversionInstance{lhs, p[2], {"y", "z"}, {p[0], el_n(p[0], p[1], p[2])}};
      });
  auto beta = [](TermKind lamk, TermKind apk) {
    return [lamk, apk](const std::vector<Term>& p) {
      Term lhs = t_node(apk, {t_node(lamk, {}, {Branch{{"y"}, p[0]}}), p[1]});
      return ConversionInstance{lhs, p[0], {"y"}, {p[1]}};
    };
  };
  add("beta-pi", {{"y"}, {}}, beta(TermKind::Lam, TermKind::Ap));
  add("beta-imp", {{"y"}, {}}, beta(TermKind::LamImp, TermKind::ApImp));
  add("beta-all", {{"y"}, {}}, beta(TermKind::LamAll, TermKind::ApAll));
  auto split = [](TermKind pairk, TermKind elk) {
    return [pairk, elk](const std::vector<Term>& p) {
      Term lhs = t_node(elk, {t_node(pairk, {p[0], p[1]})},
                        {Branch{{"y", "z"}, p[2]}});
      return ConversionInstance{lhs, p[2], {"y", "z"}, {p[0], p[1]}};
    };
  };
  add("elSigma-pair", {{}, {}, {"y", "z"}}, split(TermKind::PairSigma, TermKind::ElSigma));
  add("elEx-pair", {{}, {}, {"y", "z"}}, split(TermKind::PairEx, TermKind::ElEx));
  add("pi1-pairAnd", {{}, {}},
      [](const std::vector<Term>& p) {
        return plain(
            t_node(TermKind::Pi1And, {t_node(TermKind::PairAnd, {p[0], p[1]})}), p[0]);
      });
  add("pi2-pairAnd", {{}, {}},
      [](const std::vector<Term>& p) {
        return plain(
            t_node(TermKind::Pi2And, {t_node(TermKind::PairAnd, {p[0], p[1]})}), p[1]);
      });
  auto case_rule = [](TermKind injk, TermKind elk, int which) {
    return [injk, elk, which](const std::vector<Term>& p) {
      Term lhs = t_node(elk, {t_node(injk, {p[0]})},
                        {Branch{{"y"}, p[1]}, Branch{{"y"}, p[2]}});
      return ConversionInstance{lhs, which == 0 ? p[1] : p[2], {"y"}, {p[0]}};
    };
  };
  add("elPlus-inl", {{}, {"y"}, {"y"}}, case_rule(TermKind::Inl, TermKind::ElPlus, 0));
  add("elPlus-inr", {{}, {"y"}, {"y"}}, case_rule(TermKind::Inr, TermKind::ElPlus, 1));
  add("elOr-inl", {{}, {"y"}, {"y"}}, case_rule(TermKind::InlOr, TermKind::ElOr, 0));
  add("elOr-inr", {{}, {"y"}, {"y"}}, case_rule(TermKind::InrOr, TermKind::ElOr, 1));
  add("elId-id", {{}, {}, {}, {"y"}},
      [](const std::vector<Term>& p) {
        Term lhs = t_node(TermKind::ElId,
                          {p[0], p[1], t_node(TermKind::IdIntro, {p[2]})},
                          {Branch{{"y"}, p[3]}});
        return ConversionInstance{lhs, p[3], {"y"}, {p[0]}};
      });
  add("elList-epsilon", {{}, {"y", "z", "u"}},
      [](const std::vector<Term>& p) {
        return plain(el_list(t_leaf(TermKind::EpsList), p[0], p[1]), p[0]);
      });
  add("elList-cons", {{}, {}, {}, {"y", "z", "u"}},
      [](const std::vector<Term>& p) {
        Term lhs = el_list(t_node(TermKind::Cons, {p[0], p[1]}), p[2], p[3]);
        return ConversionInstance{lhs, p[3], {"y", "z", "u"},
                                  {p[0], p[1], el_list(p[0], p[2], p[3])}};
      });
  return out;
}

}  // namespace

const std::vector<ConversionSchema>& conversion_pairs() {
  static const std::vector<ConversionSchema> schemas = build_schemas();
  return schemas;
}

ConversionPrograms compile_conversion(const ConversionInstance& inst,
                                      std::uint64_t fuel) {
  ConversionPrograms out;
  out.lhs = interpret(inst.lhs);
  Program body = interpret(inst.rhs_body, inst.rhs_binders);
  // Substitute evaluated numerals innermost-first (the last binder has
  // de Bruijn index 0 at the top level).
  std::vector<Program> values;
  for (const auto& arg : inst.rhs_args) {
    pca::EvalResult r = pca::run(interpret(arg), fuel);
    if (!r.converged) return out;  // rhs undefined: a substituent diverges
    values.push_back(pca::make_const(r.value));
  }
  for (std::size_t i = values.size(); i-- > 0;)
    body = pca::substitute_outer(body, values[i]);
  out.rhs_defined = true;
  out.rhs = std::move(body);
  return out;
}

syntax::Term conversion_rhs_term(const ConversionInstance& inst) {
  Term t = inst.rhs_body;
  for (std::size_t i = 0; i < inst.rhs_binders.size(); ++i)
    t = syntax::substitute(t, inst.rhs_binders[i], inst.rhs_args[i]);
  return t;
}

}  // namespace mtt::interp

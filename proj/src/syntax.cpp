#include "mtt/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace mtt::syntax {

bool stratum_le(Stratum a, Stratum b) {
  if (a == b || b == Stratum::Col) return true;
  if (a == Stratum::SmallProp) return true;
  return false;
}

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::SmallProp: return "props";
    case Stratum::Set: return "set";
    case Stratum::Prop: return "prop";
    case Stratum::Col: return "col";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Constructors

Term t_var(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Var;
  n->name = std::move(name);
  return n;
}

Term t_leaf(TermKind k) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  return n;
}

Term t_node(TermKind k, std::vector<Term> args) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  n->args = std::move(args);
  return n;
}

Term t_node(TermKind k, std::vector<Term> args, std::vector<Branch> branches) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  n->args = std::move(args);
  n->branches = std::move(branches);
  return n;
}

Term t_binder_hat(TermKind k, std::string bound, TypeExpr domain, Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  n->type = std::move(domain);
  n->branches.push_back(Branch{{std::move(bound)}, std::move(body)});
  return n;
}

Term t_hat_id(TypeExpr a, Term t, Term t2) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::HatId;
  n->type = std::move(a);
  n->args = {std::move(t), std::move(t2)};
  return n;
}

Term t_numeral(std::uint64_t v) {
  Term t = t_leaf(TermKind::Zero);
  for (std::uint64_t i = 0; i < v; ++i) t = t_node(TermKind::Succ, {t});
  return t;
}

TypeExpr ty_leaf(TypeKind k) {
  auto n = std::make_shared<TypeNode>();
  n->kind = k;
  return n;
}

TypeExpr ty_tau(Term t) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Tau;
  n->t = std::move(t);
  return n;
}

TypeExpr ty_bin(TypeKind k, TypeExpr a, TypeExpr b) {
  auto n = std::make_shared<TypeNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

TypeExpr ty_binder(TypeKind k, std::string bound, TypeExpr a, TypeExpr b) {
  auto n = std::make_shared<TypeNode>();
  n->kind = k;
  n->bound = std::move(bound);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

TypeExpr ty_id(TypeExpr a, Term t, Term t2) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Id;
  n->a = std::move(a);
  n->t = std::move(t);
  n->t2 = std::move(t2);
  return n;
}

TypeExpr ty_list(TypeExpr a) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::List;
  n->a = std::move(a);
  return n;
}

TypeExpr ty_fun_props(TypeExpr a) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::FunToPropS;
  n->a = std::move(a);
  return n;
}

// ---------------------------------------------------------------------------
// Strata

Stratum stratum_of(const TypeExpr& e) {
  switch (e->kind) {
    case TypeKind::Bot: case TypeKind::Tau:
      return Stratum::SmallProp;
    case TypeKind::N0: case TypeKind::N1: case TypeKind::N:
      return Stratum::Set;
    case TypeKind::And: case TypeKind::Or: case TypeKind::Imp: {
      Stratum sa = stratum_of(e->a), sb = stratum_of(e->b);
      if (sa == Stratum::SmallProp && sb == Stratum::SmallProp)
        return Stratum::SmallProp;
      if (stratum_le(sa, Stratum::Prop) && stratum_le(sb, Stratum::Prop))
        return Stratum::Prop;
      throw StratumError("propositional connective applied to a non-proposition");
    }
    case TypeKind::Exists: case TypeKind::Forall: {
      Stratum dom = stratum_of(e->a), body = stratum_of(e->b);
      if (body == Stratum::SmallProp && stratum_le(dom, Stratum::Set))
        return Stratum::SmallProp;
      if (stratum_le(body, Stratum::Prop)) return Stratum::Prop;
      throw StratumError("quantifier body is not a proposition");
    }
    case TypeKind::Id:
      return stratum_le(stratum_of(e->a), Stratum::Set) ? Stratum::SmallProp
                                                        : Stratum::Prop;
    case TypeKind::Pi: {
      if (stratum_le(stratum_of(e->a), Stratum::Set) &&
          stratum_le(stratum_of(e->b), Stratum::Set))
        return Stratum::Set;
      throw StratumError("dependent product over non-sets");
    }
    case TypeKind::Sigma: {
      if (stratum_le(stratum_of(e->a), Stratum::Set) &&
          stratum_le(stratum_of(e->b), Stratum::Set))
        return Stratum::Set;
      return Stratum::Col;
    }
    case TypeKind::Plus: case TypeKind::List: {
      bool ok = stratum_le(stratum_of(e->a), Stratum::Set) &&
                (e->kind == TypeKind::List || stratum_le(stratum_of(e->b), Stratum::Set));
      if (ok) return Stratum::Set;
      throw StratumError("sum/list former over non-sets");
    }
    case TypeKind::SetUniverse: case TypeKind::PropS:
      return Stratum::Col;
    case TypeKind::FunToPropS:
      if (stratum_le(stratum_of(e->a), Stratum::Set)) return Stratum::Col;
      throw StratumError("propositional-function domain must be a set");
  }
  throw StratumError("unreachable");
}

// ---------------------------------------------------------------------------
// hat

Term hat(const TypeExpr& a) {
  Stratum s = stratum_of(a);
  if (!stratum_le(s, Stratum::Set))
    throw StratumError("hat is defined on set expressions only");
  switch (a->kind) {
    case TypeKind::Bot: return t_leaf(TermKind::HatBot);
    case TypeKind::N0: return t_leaf(TermKind::HatN0);
    case TypeKind::N1: return t_leaf(TermKind::HatN1);
    case TypeKind::N: return t_leaf(TermKind::HatN);
    case TypeKind::Pi:
      return t_binder_hat(TermKind::HatPi, a->bound, a->a, hat(a->b));
    case TypeKind::Sigma:
      return t_binder_hat(TermKind::HatSigma, a->bound, a->a, hat(a->b));
    case TypeKind::Plus:
      return t_node(TermKind::HatPlus, {hat(a->a), hat(a->b)});
    case TypeKind::List:
      return t_node(TermKind::HatList, {hat(a->a)});
    case TypeKind::And:
      return t_node(TermKind::HatAnd, {hat(a->a), hat(a->b)});
    case TypeKind::Or:
      return t_node(TermKind::HatOr, {hat(a->a), hat(a->b)});
    case TypeKind::Imp:
      return t_node(TermKind::HatImp, {hat(a->a), hat(a->b)});
    case TypeKind::Exists:
      return t_binder_hat(TermKind::HatExists, a->bound, a->a, hat(a->b));
    case TypeKind::Forall:
      return t_binder_hat(TermKind::HatForall, a->bound, a->a, hat(a->b));
    case TypeKind::Id:
      return t_hat_id(a->a, a->t, a->t2);
    case TypeKind::Tau:
      return a->t;
    default:
      throw StratumError("hat is defined on set expressions only");
  }
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void fv_term(const Term& t, std::set<std::string>& bound, std::set<std::string>& out);
void fv_type(const TypeExpr& a, std::set<std::string>& bound, std::set<std::string>& out);

void fv_term(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (t->kind == TermKind::Var) {
    if (!bound.count(t->name)) out.insert(t->name);
    return;
  }
  if (t->type) fv_type(t->type, bound, out);
  for (const auto& a : t->args) fv_term(a, bound, out);
  for (const auto& br : t->branches) {
    std::vector<std::string> added;
    for (const auto& v : br.vars)
      if (bound.insert(v).second) added.push_back(v);
    fv_term(br.body, bound, out);
    for (const auto& v : added) bound.erase(v);
  }
}

void fv_type(const TypeExpr& a, std::set<std::string>& bound, std::set<std::string>& out) {
  if (a->t) fv_term(a->t, bound, out);
  if (a->t2) fv_term(a->t2, bound, out);
  if (a->a) fv_type(a->a, bound, out);
  if (a->b) {
    if (!a->bound.empty()) {
      bool added = bound.insert(a->bound).second;
      fv_type(a->b, bound, out);
      if (added) bound.erase(a->bound);
    } else {
      fv_type(a->b, bound, out);
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  fv_term(t, bound, out);
  return out;
}

std::set<std::string> free_vars(const TypeExpr& a) {
  std::set<std::string> bound, out;
  fv_type(a, bound, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "'" + (i > 1 ? std::to_string(i) : "");
    if (!avoid.count(cand)) return cand;
  }
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

Branch subst_branch(const Branch& br, const std::string& x, const Term& a) {
  if (std::find(br.vars.begin(), br.vars.end(), x) != br.vars.end()) return br;
  std::set<std::string> a_fv = free_vars(a);
  std::vector<std::string> vars = br.vars;
  Term body = br.body;
  for (auto& v : vars) {
    if (a_fv.count(v)) {
      std::set<std::string> avoid = a_fv;
      auto body_fv = free_vars(body);
      avoid.insert(body_fv.begin(), body_fv.end());
      avoid.insert(x);
      avoid.insert(vars.begin(), vars.end());
      std::string v2 = fresh_name(v, avoid);
      body = substitute(body, v, t_var(v2));
      v = v2;
    }
  }
  return Branch{std::move(vars), substitute(body, x, a)};
}

}  // namespace

Term substitute(const Term& t, const std::string& x, const Term& a) {
  if (t->kind == TermKind::Var)
    return t->name == x ? a : t;
  auto n = std::make_shared<TermNode>(*t);
  if (t->type) n->type = substitute(t->type, x, a);
  for (auto& arg : n->args) arg = substitute(arg, x, a);
  // Binder-hat kinds scope their variable over the body only; the branch
  // machinery already handles that uniformly.
  for (auto& br : n->branches) br = subst_branch(br, x, a);
  return n;
}

TypeExpr substitute(const TypeExpr& ty, const std::string& x, const Term& a) {
  auto n = std::make_shared<TypeNode>(*ty);
  if (ty->t) n->t = substitute(ty->t, x, a);
  if (ty->t2) n->t2 = substitute(ty->t2, x, a);
  if (ty->a) n->a = substitute(ty->a, x, a);
  if (ty->b) {
    if (!ty->bound.empty()) {
      if (ty->bound == x) return n;  // shadowed
      std::set<std::string> a_fv = free_vars(a);
      if (a_fv.count(ty->bound)) {
        std::set<std::string> avoid = a_fv;
        auto body_fv = free_vars(ty->b);
        avoid.insert(body_fv.begin(), body_fv.end());
        avoid.insert(x);
        std::string v2 = fresh_name(ty->bound, avoid);
        n->b = substitute(substitute(ty->b, ty->bound, t_var(v2)), x, a);
        n->bound = v2;
        return n;
      }
    }
    n->b = substitute(ty->b, x, a);
  }
  return n;
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

using NameEnv = std::vector<std::pair<std::string, std::string>>;

bool alpha_term(const Term& s, const Term& t, NameEnv& env);
bool alpha_type(const TypeExpr& a, const TypeExpr& b, NameEnv& env);

bool alpha_var(const std::string& l, const std::string& r, const NameEnv& env) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    bool ml = it->first == l, mr = it->second == r;
    if (ml || mr) return ml && mr;
  }
  return l == r;
}

bool alpha_term(const Term& s, const Term& t, NameEnv& env) {
  if (s->kind != t->kind) return false;
  if (s->kind == TermKind::Var) return alpha_var(s->name, t->name, env);
  if (static_cast<bool>(s->type) != static_cast<bool>(t->type)) return false;
  if (s->type && !alpha_type(s->type, t->type, env)) return false;
  if (s->args.size() != t->args.size() || s->branches.size() != t->branches.size())
    return false;
  for (std::size_t i = 0; i < s->args.size(); ++i)
    if (!alpha_term(s->args[i], t->args[i], env)) return false;
  for (std::size_t i = 0; i < s->branches.size(); ++i) {
    const Branch& bs = s->branches[i];
    const Branch& bt = t->branches[i];
    if (bs.vars.size() != bt.vars.size()) return false;
    for (std::size_t j = 0; j < bs.vars.size(); ++j)
      env.emplace_back(bs.vars[j], bt.vars[j]);
    bool ok = alpha_term(bs.body, bt.body, env);
    env.resize(env.size() - bs.vars.size());
    if (!ok) return false;
  }
  return true;
}

bool alpha_type(const TypeExpr& a, const TypeExpr& b, NameEnv& env) {
  if (a->kind != b->kind) return false;
  if (static_cast<bool>(a->t) != static_cast<bool>(b->t)) return false;
  if (a->t && !alpha_term(a->t, b->t, env)) return false;
  if (static_cast<bool>(a->t2) != static_cast<bool>(b->t2)) return false;
  if (a->t2 && !alpha_term(a->t2, b->t2, env)) return false;
  if (static_cast<bool>(a->a) != static_cast<bool>(b->a)) return false;
  if (a->a && !alpha_type(a->a, b->a, env)) return false;
  if (static_cast<bool>(a->b) != static_cast<bool>(b->b)) return false;
  if (a->b) {
    bool binds = !a->bound.empty();
    if (binds != !b->bound.empty()) return false;
    if (binds) env.emplace_back(a->bound, b->bound);
    bool ok = alpha_type(a->b, b->b, env);
    if (binds) env.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool alpha_equal(const Term& s, const Term& t) {
  NameEnv env;
  return alpha_term(s, t, env);
}

bool alpha_equal(const TypeExpr& a, const TypeExpr& b) {
  NameEnv env;
  return alpha_type(a, b, env);
}

bool alpha_equal(const Judgement& j1, const Judgement& j2) {
  if (j1.kind != j2.kind || j1.ctx.size() != j2.ctx.size()) return false;
  NameEnv env;
  for (std::size_t i = 0; i < j1.ctx.size(); ++i) {
    if (!alpha_type(j1.ctx[i].second, j2.ctx[i].second, env)) return false;
    env.emplace_back(j1.ctx[i].first, j2.ctx[i].first);
  }
  switch (j1.kind) {
    case JudgementKind::TypeWf:
      return j1.stratum == j2.stratum && alpha_type(j1.type_a, j2.type_a, env);
    case JudgementKind::TypeEq:
      return j1.stratum == j2.stratum && alpha_type(j1.type_a, j2.type_a, env) &&
             alpha_type(j1.type_b, j2.type_b, env);
    case JudgementKind::TermOf:
      return alpha_term(j1.term_a, j2.term_a, env) &&
             alpha_type(j1.of_type, j2.of_type, env);
    case JudgementKind::TermEq:
      return alpha_term(j1.term_a, j2.term_a, env) &&
             alpha_term(j1.term_b, j2.term_b, env) &&
             alpha_type(j1.of_type, j2.of_type, env);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Term shapes (shared by parser and printer)

namespace {

struct Shape {
  TermKind kind;
  int args;
  std::vector<int> branch_vars;  // binder count per branch, in order
};

const std::map<std::string, Shape>& call_shapes() {
  static const std::map<std::string, Shape> table = {
      {"emp0", {TermKind::Emp0, 1, {}}},
      {"elN1", {TermKind::ElN1, 2, {}}},
      {"succ", {TermKind::Succ, 1, {}}},
      {"elN", {TermKind::ElN, 2, {2}}},
      {"ap", {TermKind::Ap, 2, {}}},
      {"apImp", {TermKind::ApImp, 2, {}}},
      {"apAll", {TermKind::ApAll, 2, {}}},
      {"pair", {TermKind::PairSigma, 2, {}}},
      {"elSigma", {TermKind::ElSigma, 1, {2}}},
      {"pairAnd", {TermKind::PairAnd, 2, {}}},
      {"pi1And", {TermKind::Pi1And, 1, {}}},
      {"pi2And", {TermKind::Pi2And, 1, {}}},
      {"inl", {TermKind::Inl, 1, {}}},
      {"inr", {TermKind::Inr, 1, {}}},
      {"elPlus", {TermKind::ElPlus, 1, {1, 1}}},
      {"inlOr", {TermKind::InlOr, 1, {}}},
      {"inrOr", {TermKind::InrOr, 1, {}}},
      {"elOr", {TermKind::ElOr, 1, {1, 1}}},
      {"cons", {TermKind::Cons, 2, {}}},
      {"elList", {TermKind::ElList, 2, {3}}},
      {"r0", {TermKind::R0, 1, {}}},
      {"pairEx", {TermKind::PairEx, 2, {}}},
      {"elEx", {TermKind::ElEx, 1, {2}}},
      {"id", {TermKind::IdIntro, 1, {}}},
      {"elId", {TermKind::ElId, 3, {1}}},
      {"plushat", {TermKind::HatPlus, 2, {}}},
      {"Listhat", {TermKind::HatList, 1, {}}},
      {"andhat", {TermKind::HatAnd, 2, {}}},
      {"orhat", {TermKind::HatOr, 2, {}}},
      {"imphat", {TermKind::HatImp, 2, {}}},
  };
  return table;
}

const char* call_keyword(TermKind k) {
  for (const auto& [kw, shape] : call_shapes())
    if (shape.kind == k) return kw.c_str();
  return nullptr;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = [] {
    std::set<std::string> w;
    for (const auto& [kw, _] : call_shapes()) w.insert(kw);
    for (const char* s :
         {"star", "zero", "epsilon", "lam", "lamImp", "lamAll", "N0hat", "N1hat",
          "Nhat", "bothat", "Pihat", "Sigmahat", "existshat", "forallhat", "Idhat",
          "N0", "N1", "N", "Bot", "tau", "Id", "Pi", "Sig", "Ex", "All", "List",
          "Set", "props", "set", "col", "prop", "in"})
      w.insert(s);
    return w;
  }();
  return words;
}

// ---------------------------------------------------------------------------
// Tokenizer

enum class Tok { Ident, Number, LParen, RParen, LBrack, RBrack, Comma, Dot,
                 Eq, Plus, Arrow, AndOp, OrOp, End };

struct Token {
  Tok tok;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok t, std::string text, std::size_t pos) {
    out.push_back(Token{t, std::move(text), pos});
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_' || s[j] == '\''))
        ++j;
      push(Tok::Ident, std::string(s.substr(i, j - i)), pos);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(Tok::Number, std::string(s.substr(i, j - i)), pos);
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, "(", pos); ++i; break;
      case ')': push(Tok::RParen, ")", pos); ++i; break;
      case '[': push(Tok::LBrack, "[", pos); ++i; break;
      case ']': push(Tok::RBrack, "]", pos); ++i; break;
      case ',': push(Tok::Comma, ",", pos); ++i; break;
      case '.': push(Tok::Dot, ".", pos); ++i; break;
      case '=': push(Tok::Eq, "=", pos); ++i; break;
      case '+': push(Tok::Plus, "+", pos); ++i; break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') { push(Tok::Arrow, "->", pos); i += 2; break; }
        throw ParseError("stray '-'", pos);
      case '/':
        if (i + 1 < s.size() && s[i + 1] == '\\') { push(Tok::AndOp, "/\\", pos); i += 2; break; }
        throw ParseError("stray '/'", pos);
      case '\\':
        if (i + 1 < s.size() && s[i + 1] == '/') { push(Tok::OrOp, "\\/", pos); i += 2; break; }
        throw ParseError("stray '\\'", pos);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back(Token{Tok::End, "", s.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }
  const Token& peek2() const { return toks[std::min(at + 1, toks.size() - 1)]; }
  Token next() { return toks[at++]; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " (near '" + peek().text + "')", peek().pos);
  }

  bool accept(Tok t) {
    if (peek().tok == t) { ++at; return true; }
    return false;
  }

  void expect(Tok t, const char* what) {
    if (!accept(t)) fail(std::string("expected ") + what);
  }

  bool accept_word(const char* w) {
    if (peek().tok == Tok::Ident && peek().text == w) { ++at; return true; }
    return false;
  }

  void expect_word(const char* w) {
    if (!accept_word(w)) fail(std::string("expected '") + w + "'");
  }

  std::string expect_var() {
    if (peek().tok != Tok::Ident) fail("expected a variable name");
    std::string name = next().text;
    if (reserved_words().count(name))
      throw ParseError("'" + name + "' is reserved", toks[at - 1].pos);
    return name;
  }

  // --- terms ---
  Term parse_term();
  Branch parse_branch(int nvars);

  // --- types ---
  TypeExpr parse_type();
  TypeExpr parse_type_or();
  TypeExpr parse_type_and();
  TypeExpr parse_type_plus();
  TypeExpr parse_type_atom();
  std::pair<std::string, TypeExpr> parse_binder_head();  // '(' x 'in' A ')'

  // --- judgements ---
  Judgement parse_judgement();
  Context parse_context();
};

Branch Parser::parse_branch(int nvars) {
  expect(Tok::LParen, "'('");
  Branch br;
  for (int i = 0; i < nvars; ++i) {
    if (i > 0) expect(Tok::Comma, "','");
    br.vars.push_back(expect_var());
  }
  expect(Tok::RParen, "')'");
  br.body = parse_term();
  return br;
}

Term Parser::parse_term() {
  const Token& tk = peek();
  if (tk.tok == Tok::LParen) {
    next();
    Term t = parse_term();
    expect(Tok::RParen, "')'");
    return t;
  }
  if (tk.tok == Tok::Number) {
    std::uint64_t v = std::stoull(next().text);
    return t_numeral(v);
  }
  if (tk.tok != Tok::Ident) fail("expected a term");
  std::string w = next().text;
  if (w == "star") return t_leaf(TermKind::Star);
  if (w == "zero") return t_leaf(TermKind::Zero);
  if (w == "epsilon") return t_leaf(TermKind::EpsList);
  if (w == "N0hat") return t_leaf(TermKind::HatN0);
  if (w == "N1hat") return t_leaf(TermKind::HatN1);
  if (w == "Nhat") return t_leaf(TermKind::HatN);
  if (w == "bothat") return t_leaf(TermKind::HatBot);
  if (w == "lam" || w == "lamImp" || w == "lamAll") {
    TermKind k = w == "lam" ? TermKind::Lam
                 : w == "lamImp" ? TermKind::LamImp : TermKind::LamAll;
    std::string x = expect_var();
    expect(Tok::Dot, "'.'");
    return t_node(k, {}, {Branch{{x}, parse_term()}});
  }
  if (w == "Pihat" || w == "Sigmahat" || w == "existshat" || w == "forallhat") {
    TermKind k = w == "Pihat" ? TermKind::HatPi
                 : w == "Sigmahat" ? TermKind::HatSigma
                 : w == "existshat" ? TermKind::HatExists : TermKind::HatForall;
    auto [x, dom] = parse_binder_head();
    return t_binder_hat(k, x, dom, parse_term());
  }
  if (w == "Idhat") {
    expect(Tok::LParen, "'('");
    TypeExpr a = parse_type();
    expect(Tok::Comma, "','");
    Term t = parse_term();
    expect(Tok::Comma, "','");
    Term t2 = parse_term();
    expect(Tok::RParen, "')'");
    return t_hat_id(a, t, t2);
  }
  auto it = call_shapes().find(w);
  if (it != call_shapes().end()) {
    const Shape& sh = it->second;
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    std::vector<Branch> branches;
    for (int i = 0; i < sh.args; ++i) {
      if (i > 0) expect(Tok::Comma, "','");
      args.push_back(parse_term());
    }
    for (std::size_t i = 0; i < sh.branch_vars.size(); ++i) {
      if (sh.args > 0 || i > 0) expect(Tok::Comma, "','");
      branches.push_back(parse_branch(sh.branch_vars[i]));
    }
    expect(Tok::RParen, "')'");
    return t_node(sh.kind, std::move(args), std::move(branches));
  }
  if (reserved_words().count(w))
    throw ParseError("'" + w + "' cannot start a term", toks[at - 1].pos);
  return t_var(w);
}

std::pair<std::string, TypeExpr> Parser::parse_binder_head() {
  expect(Tok::LParen, "'('");
  std::string x = expect_var();
  expect_word("in");
  TypeExpr a = parse_type();
  expect(Tok::RParen, "')'");
  return {x, a};
}

TypeExpr Parser::parse_type() {
  TypeExpr lhs = parse_type_or();
  if (accept(Tok::Arrow)) {
    TypeExpr rhs = parse_type();
    if (rhs->kind == TypeKind::PropS) return ty_fun_props(lhs);
    return ty_bin(TypeKind::Imp, lhs, rhs);
  }
  return lhs;
}

TypeExpr Parser::parse_type_or() {
  TypeExpr lhs = parse_type_and();
  while (accept(Tok::OrOp)) lhs = ty_bin(TypeKind::Or, lhs, parse_type_and());
  return lhs;
}

TypeExpr Parser::parse_type_and() {
  TypeExpr lhs = parse_type_plus();
  while (accept(Tok::AndOp)) lhs = ty_bin(TypeKind::And, lhs, parse_type_plus());
  return lhs;
}

TypeExpr Parser::parse_type_plus() {
  TypeExpr lhs = parse_type_atom();
  while (accept(Tok::Plus)) lhs = ty_bin(TypeKind::Plus, lhs, parse_type_atom());
  return lhs;
}

TypeExpr Parser::parse_type_atom() {
  const Token& tk = peek();
  if (tk.tok == Tok::LParen) {
    next();
    TypeExpr a = parse_type();
    expect(Tok::RParen, "')'");
    return a;
  }
  if (tk.tok != Tok::Ident) fail("expected a type");
  std::string w = next().text;
  if (w == "N0") return ty_leaf(TypeKind::N0);
  if (w == "N1") return ty_leaf(TypeKind::N1);
  if (w == "N") return ty_leaf(TypeKind::N);
  if (w == "Bot") return ty_leaf(TypeKind::Bot);
  if (w == "Set") return ty_leaf(TypeKind::SetUniverse);
  if (w == "props") return ty_leaf(TypeKind::PropS);
  if (w == "tau") {
    expect(Tok::LParen, "'('");
    Term t = parse_term();
    expect(Tok::RParen, "')'");
    return ty_tau(t);
  }
  if (w == "List") {
    expect(Tok::LParen, "'('");
    TypeExpr a = parse_type();
    expect(Tok::RParen, "')'");
    return ty_list(a);
  }
  if (w == "Id") {
    expect(Tok::LParen, "'('");
    TypeExpr a = parse_type();
    expect(Tok::Comma, "','");
    Term t = parse_term();
    expect(Tok::Comma, "','");
    Term t2 = parse_term();
    expect(Tok::RParen, "')'");
    return ty_id(a, t, t2);
  }
  if (w == "Pi" || w == "Sig" || w == "Ex" || w == "All") {
    TypeKind k = w == "Pi" ? TypeKind::Pi
                 : w == "Sig" ? TypeKind::Sigma
                 : w == "Ex" ? TypeKind::Exists : TypeKind::Forall;
    auto [x, dom] = parse_binder_head();
    return ty_binder(k, x, dom, parse_type());
  }
  throw ParseError("'" + w + "' cannot start a type", toks[at - 1].pos);
}

Context Parser::parse_context() {
  Context ctx;
  expect(Tok::LBrack, "'['");
  if (accept(Tok::RBrack)) return ctx;
  while (true) {
    std::string x = expect_var();
    expect_word("in");
    ctx.emplace_back(x, parse_type());
    if (accept(Tok::RBrack)) break;
    expect(Tok::Comma, "','");
  }
  return ctx;
}

Judgement Parser::parse_judgement() {
  // A top-level 'in' before the context bracket marks a term judgement.
  bool term_form = false;
  int depth = 0;
  for (std::size_t i = at; i < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.tok == Tok::LParen) ++depth;
    else if (t.tok == Tok::RParen) --depth;
    else if (t.tok == Tok::LBrack && depth == 0) break;
    else if (depth == 0 && t.tok == Tok::Ident && t.text == "in") {
      term_form = true;
      break;
    }
  }
  Judgement j;
  if (term_form) {
    j.term_a = parse_term();
    if (accept(Tok::Eq)) {
      j.kind = JudgementKind::TermEq;
      j.term_b = parse_term();
    } else {
      j.kind = JudgementKind::TermOf;
    }
    expect_word("in");
    j.of_type = parse_type();
  } else {
    j.type_a = parse_type();
    if (accept(Tok::Eq)) {
      j.kind = JudgementKind::TypeEq;
      j.type_b = parse_type();
    } else {
      j.kind = JudgementKind::TypeWf;
    }
    if (accept_word("set")) j.stratum = Stratum::Set;
    else if (accept_word("col")) j.stratum = Stratum::Col;
    else if (accept_word("prop")) j.stratum = Stratum::Prop;
    else if (accept_word("props")) j.stratum = Stratum::SmallProp;
    else fail("expected one of set/col/prop/props");
  }
  if (peek().tok == Tok::LBrack) j.ctx = parse_context();
  return j;
}

void check_scope(const Term& t, const Context& ctx, std::size_t err_pos) {
  std::set<std::string> scope;
  for (const auto& [x, _] : ctx) scope.insert(x);
  for (const auto& v : free_vars(t))
    if (!scope.count(v))
      throw ParseError("unbound variable '" + v + "'", err_pos);
}

void check_scope(const TypeExpr& a, const Context& ctx, std::size_t err_pos) {
  std::set<std::string> scope;
  for (const auto& [x, _] : ctx) scope.insert(x);
  for (const auto& v : free_vars(a))
    if (!scope.count(v))
      throw ParseError("unbound variable '" + v + "'", err_pos);
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser p{tokenize(text)};
  Term t = p.parse_term();
  if (p.peek().tok != Tok::End) p.fail("trailing input after term");
  return t;
}

TypeExpr parse_type(std::string_view text) {
  Parser p{tokenize(text)};
  TypeExpr a = p.parse_type();
  if (p.peek().tok != Tok::End) p.fail("trailing input after type");
  return a;
}

Judgement parse_judgement(std::string_view text) {
  Parser p{tokenize(text)};
  Judgement j = p.parse_judgement();
  if (p.peek().tok != Tok::End) p.fail("trailing input after judgement");
  // Context entries may mention only earlier variables; subjects only
  // context variables.
  for (std::size_t i = 0; i < j.ctx.size(); ++i) {
    for (std::size_t k = i; k < j.ctx.size(); ++k)
      if (k > i && j.ctx[k].first == j.ctx[i].first)
        throw ParseError("duplicate context variable '" + j.ctx[i].first + "'", 0);
    Context prefix(j.ctx.begin(), j.ctx.begin() + i);
    check_scope(j.ctx[i].second, prefix, 0);
  }
  if (j.term_a) check_scope(j.term_a, j.ctx, 0);
  if (j.term_b) check_scope(j.term_b, j.ctx, 0);
  if (j.type_a) check_scope(j.type_a, j.ctx, 0);
  if (j.type_b) check_scope(j.type_b, j.ctx, 0);
  if (j.of_type) check_scope(j.of_type, j.ctx, 0);
  return j;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

void print_term(const Term& t, std::string& out);
void print_type(const TypeExpr& a, std::string& out, int prec);

bool as_numeral(const Term& t, std::uint64_t& out) {
  const TermNode* cur = t.get();
  std::uint64_t n = 0;
  while (cur->kind == TermKind::Succ) {
    ++n;
    cur = cur->args[0].get();
  }
  if (cur->kind != TermKind::Zero) return false;
  out = n;
  return true;
}

void print_branch(const Branch& br, std::string& out) {
  out += "(";
  for (std::size_t i = 0; i < br.vars.size(); ++i) {
    if (i) out += ",";
    out += br.vars[i];
  }
  out += ") ";
  print_term(br.body, out);
}

void print_term(const Term& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var: out += t->name; return;
    case TermKind::Star: out += "star"; return;
    case TermKind::EpsList: out += "epsilon"; return;
    case TermKind::HatN0: out += "N0hat"; return;
    case TermKind::HatN1: out += "N1hat"; return;
    case TermKind::HatN: out += "Nhat"; return;
    case TermKind::HatBot: out += "bothat"; return;
    case TermKind::Zero: out += "0"; return;
    case TermKind::Succ: {
      std::uint64_t v;
      if (as_numeral(t, v)) { out += std::to_string(v); return; }
      out += "succ(";
      print_term(t->args[0], out);
      out += ")";
      return;
    }
    case TermKind::Lam: case TermKind::LamImp: case TermKind::LamAll: {
      out += t->kind == TermKind::Lam ? "lam "
             : t->kind == TermKind::LamImp ? "lamImp " : "lamAll ";
      out += t->branches[0].vars[0];
      out += ". ";
      print_term(t->branches[0].body, out);
      return;
    }
    case TermKind::HatPi: case TermKind::HatSigma:
    case TermKind::HatExists: case TermKind::HatForall: {
      out += t->kind == TermKind::HatPi ? "Pihat"
             : t->kind == TermKind::HatSigma ? "Sigmahat"
             : t->kind == TermKind::HatExists ? "existshat" : "forallhat";
      out += " (" + t->branches[0].vars[0] + " in ";
      print_type(t->type, out, 0);
      out += ") ";
      print_term(t->branches[0].body, out);
      return;
    }
    case TermKind::HatId: {
      out += "Idhat(";
      print_type(t->type, out, 0);
      out += ", ";
      print_term(t->args[0], out);
      out += ", ";
      print_term(t->args[1], out);
      out += ")";
      return;
    }
    default: {
      const char* kw = call_keyword(t->kind);
      out += kw ? kw : "?";
      out += "(";
      bool first = true;
      for (const auto& a : t->args) {
        if (!first) out += ", ";
        first = false;
        print_term(a, out);
      }
      for (const auto& br : t->branches) {
        if (!first) out += ", ";
        first = false;
        print_branch(br, out);
      }
      out += ")";
      return;
    }
  }
}

// Precedence levels: 0 arrow, 1 or, 2 and, 3 plus, 4 atom.
void print_type(const TypeExpr& a, std::string& out, int prec) {
  auto wrap = [&](int mine, auto&& body) {
    if (mine < prec) out += "(";
    body();
    if (mine < prec) out += ")";
  };
  switch (a->kind) {
    case TypeKind::N0: out += "N0"; return;
    case TypeKind::N1: out += "N1"; return;
    case TypeKind::N: out += "N"; return;
    case TypeKind::Bot: out += "Bot"; return;
    case TypeKind::SetUniverse: out += "Set"; return;
    case TypeKind::PropS: out += "props"; return;
    case TypeKind::Tau:
      out += "tau(";
      print_term(a->t, out);
      out += ")";
      return;
    case TypeKind::List:
      out += "List(";
      print_type(a->a, out, 0);
      out += ")";
      return;
    case TypeKind::Id:
      out += "Id(";
      print_type(a->a, out, 0);
      out += ", ";
      print_term(a->t, out);
      out += ", ";
      print_term(a->t2, out);
      out += ")";
      return;
    case TypeKind::Imp:
      wrap(0, [&] {
        print_type(a->a, out, 1);
        out += " -> ";
        print_type(a->b, out, 0);
      });
      return;
    case TypeKind::FunToPropS:
      wrap(0, [&] {
        print_type(a->a, out, 1);
        out += " -> props";
      });
      return;
    case TypeKind::Or:
      wrap(1, [&] {
        print_type(a->a, out, 1);
        out += " \\/ ";
        print_type(a->b, out, 2);
      });
      return;
    case TypeKind::And:
      wrap(2, [&] {
        print_type(a->a, out, 2);
        out += " /\\ ";
        print_type(a->b, out, 3);
      });
      return;
    case TypeKind::Plus:
      wrap(3, [&] {
        print_type(a->a, out, 3);
        out += " + ";
        print_type(a->b, out, 4);
      });
      return;
    case TypeKind::Pi: case TypeKind::Sigma:
    case TypeKind::Exists: case TypeKind::Forall:
      wrap(0, [&] {
        out += a->kind == TypeKind::Pi ? "Pi"
               : a->kind == TypeKind::Sigma ? "Sig"
               : a->kind == TypeKind::Exists ? "Ex" : "All";
        out += " (" + a->bound + " in ";
        print_type(a->a, out, 0);
        out += ") ";
        print_type(a->b, out, 0);
      });
      return;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const TypeExpr& a) {
  std::string out;
  print_type(a, out, 0);
  return out;
}

std::string to_string(const Judgement& j) {
  std::string out;
  switch (j.kind) {
    case JudgementKind::TermOf:
      print_term(j.term_a, out);
      out += " in ";
      print_type(j.of_type, out, 0);
      break;
    case JudgementKind::TermEq:
      print_term(j.term_a, out);
      out += " = ";
      print_term(j.term_b, out);
      out += " in ";
      print_type(j.of_type, out, 0);
      break;
    case JudgementKind::TypeWf:
      print_type(j.type_a, out, 0);
      out += " ";
      out += stratum_name(j.stratum);
      break;
    case JudgementKind::TypeEq:
      print_type(j.type_a, out, 0);
      out += " = ";
      print_type(j.type_b, out, 0);
      out += " ";
      out += stratum_name(j.stratum);
      break;
  }
  out += " [";
  for (std::size_t i = 0; i < j.ctx.size(); ++i) {
    if (i) out += ", ";
    out += j.ctx[i].first + " in ";
    print_type(j.ctx[i].second, out, 0);
  }
  out += "]";
  return out;
}

}  // namespace mtt::syntax

#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtt::syntax {

// Untyped a-priori syntax: every constructor parses and interprets, even
// gluings that no typing derivation would ever accept.

enum class TermKind {
  Var, Emp0, Star, ElN1, Zero, Succ, ElN,
  Lam, Ap, LamImp, ApImp, LamAll, ApAll,
  PairSigma, ElSigma, PairAnd, Pi1And, Pi2And,
  Inl, Inr, ElPlus, InlOr, InrOr, ElOr,
  EpsList, Cons, ElList, R0,
  PairEx, ElEx, IdIntro, ElId,
  HatN0, HatN1, HatN, HatPi, HatSigma, HatPlus, HatList,
  HatBot, HatAnd, HatOr, HatImp, HatExists, HatForall, HatId,
};

enum class TypeKind {
  Bot, Tau, And, Or, Imp, Exists, Forall, Id,
  N0, N1, N, Pi, Sigma, Plus, List,
  SetUniverse, PropS, FunToPropS,
};

enum class Stratum { SmallProp, Set, Prop, Col };

// SmallProp embeds into Set and Prop; Set and Prop embed into Col.
bool stratum_le(Stratum a, Stratum b);
const char* stratum_name(Stratum s);

struct TermNode;
struct TypeNode;
using Term = std::shared_ptr<const TermNode>;
using TypeExpr = std::shared_ptr<const TypeNode>;

struct Branch {
  std::vector<std::string> vars;
  Term body;
};

struct TermNode {
  TermKind kind;
  std::string name;             // Var
  std::vector<Term> args;       // non-binding subterms, in order
  std::vector<Branch> branches; // binding subterms, in order
  TypeExpr type;                // HatPi/HatSigma/HatExists/HatForall/HatId domain
};

struct TypeNode {
  TypeKind kind;
  Term t, t2;          // Tau(t); Id(A,t,t2)
  TypeExpr a, b;       // subexpressions
  std::string bound;   // Pi/Sigma/Exists/Forall binder
};

// --- constructors ---------------------------------------------------------
Term t_var(std::string name);
Term t_leaf(TermKind k);  // Star, Zero, EpsList, hat constants
Term t_node(TermKind k, std::vector<Term> args);
Term t_node(TermKind k, std::vector<Term> args, std::vector<Branch> branches);
Term t_binder_hat(TermKind k, std::string bound, TypeExpr domain, Term body);
Term t_hat_id(TypeExpr a, Term t, Term t2);
Term t_numeral(std::uint64_t n);

TypeExpr ty_leaf(TypeKind k);
TypeExpr ty_tau(Term t);
TypeExpr ty_bin(TypeKind k, TypeExpr a, TypeExpr b);  // And/Or/Imp/Plus
TypeExpr ty_binder(TypeKind k, std::string bound, TypeExpr a, TypeExpr b);
TypeExpr ty_id(TypeExpr a, Term t, Term t2);
TypeExpr ty_list(TypeExpr a);
TypeExpr ty_fun_props(TypeExpr a);

// --- judgements ------------------------------------------------------------
using Context = std::vector<std::pair<std::string, TypeExpr>>;

enum class JudgementKind { TypeWf, TypeEq, TermOf, TermEq };

struct Judgement {
  JudgementKind kind;
  Stratum stratum = Stratum::Set;  // TypeWf/TypeEq
  TypeExpr type_a, type_b;         // TypeWf: type_a; TypeEq: both
  Term term_a, term_b;             // TermOf: term_a; TermEq: both
  TypeExpr of_type;                // TermOf/TermEq
  Context ctx;
};

// --- operations ------------------------------------------------------------
struct StratumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Stratum stratum_of(const TypeExpr& a);  // throws StratumError on incoherence

// The hat abbreviation, defined exactly on set expressions
// (small propositions included).
Term hat(const TypeExpr& a);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const TypeExpr& a);

Term substitute(const Term& t, const std::string& x, const Term& a);
TypeExpr substitute(const TypeExpr& ty, const std::string& x, const Term& a);

bool alpha_equal(const Term& s, const Term& t);
bool alpha_equal(const TypeExpr& a, const TypeExpr& b);
bool alpha_equal(const Judgement& j1, const Judgement& j2);

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// --- concrete grammar -------------------------------------------------------
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : std::runtime_error(std::move(msg)), position(pos) {}
};

Term parse_term(std::string_view text);
TypeExpr parse_type(std::string_view text);
Judgement parse_judgement(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const TypeExpr& a);
std::string to_string(const Judgement& j);

}  // namespace mtt::syntax

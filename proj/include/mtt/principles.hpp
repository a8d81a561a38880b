#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mtt/nat.hpp"
#include "mtt/realizability.hpp"
#include "mtt/syntax.hpp"
#include "mtt/verdict.hpp"

namespace mtt::principles {

// --- first-order arithmetic -------------------------------------------------

struct HaTermNode;
struct HaFormulaNode;
using HaTerm = std::shared_ptr<const HaTermNode>;
using HaFormula = std::shared_ptr<const HaFormulaNode>;

struct HaTermNode {
  enum Kind { Var, Zero, Succ, Add, Mul } kind;
  std::string name;       // Var
  HaTerm a, b;
};

struct HaFormulaNode {
  enum Kind { False, Eq, And, Or, Imp, Exists, Forall } kind;
  HaTerm t1, t2;          // Eq
  HaFormula a, b;         // connectives
  std::string bound;      // quantifiers
};

HaTerm ha_var(std::string name);
HaTerm ha_zero();
HaTerm ha_succ(HaTerm t);
HaTerm ha_add(HaTerm a, HaTerm b);
HaTerm ha_mul(HaTerm a, HaTerm b);
HaTerm ha_num(std::uint64_t n);

HaFormula ha_false();
HaFormula ha_eq(HaTerm a, HaTerm b);
HaFormula ha_and(HaFormula a, HaFormula b);
HaFormula ha_or(HaFormula a, HaFormula b);
HaFormula ha_imp(HaFormula a, HaFormula b);
HaFormula ha_exists(std::string x, HaFormula a);
HaFormula ha_forall(std::string x, HaFormula a);

std::string to_string(const HaTerm& t);
std::string to_string(const HaFormula& f);

using HaEnv = std::map<std::string, Nat>;

Nat ha_eval(const HaTerm& t, const HaEnv& env);

// Bounded classical truth of an HA formula (quantifiers sampled).
Verdict ha_truth(const HaFormula& f, const HaEnv& env, const Budget& b);

// Standard Kleene realizability over the same applicative structure.
Verdict kleene_realizes(const Nat& n, const HaFormula& f, const HaEnv& env,
                        const Budget& b);

// The embedding of HA into the type theory: atoms become identities over N,
// primitive recursive symbols are translated through the recursor.
syntax::Term embed_ha_term(const HaTerm& t);
syntax::TypeExpr embed_ha(const HaFormula& f);

// --- concrete realizers ------------------------------------------------------

Nat extfun_realizer();       // Lf.Lg.Lr.0
Nat ac_realizer();           // Lr.<Ln.p1({r}(n)), Ln.p2({r}(n))>
Nat ac_unique_realizer();    // Lr.<Ln.p1(p1({r}(n))), Ln.p2(p1({r}(n)))>
Nat ct_lambda_realizer();    // Lf.<f, Lx.<p1({r}(f,x)), <p2({r}(f,x)), 0>>>
Nat ct_realizer();           // glueing of AC_{N,N} with CT_lambda

// --- instance validation ------------------------------------------------------

struct MatrixRow {
  std::string name;
  Verdict verdict;
  std::string note;
};

struct MatrixReport {
  std::vector<MatrixRow> rows;
  bool all_holds() const;
};

MatrixReport validate_extfun(const Budget& b);
MatrixReport validate_ac(const Budget& b);
MatrixReport validate_ac_unique(const Budget& b);

struct AcUniqueInstance {
  syntax::TypeExpr domain;        // A, finite-classifiable
  syntax::TypeExpr codomain;      // B
  syntax::TypeExpr rho;           // proposition with free x, y
};

Verdict ac_unique_check(const AcUniqueInstance& inst, const Budget& b);

// Function corpus for Church-thesis extraction: named closed terms of
// (Pi y in N) N.
struct CtFunction {
  std::string name;
  syntax::Term term;
};

const std::vector<CtFunction>& ct_function_corpus();

struct CtRow {
  std::string name;
  bool extracted_agrees = false;  // {e}(x) == I(Ap(f,x)) on all samples
  bool witnesses_pass = false;    // kleene_T / kleene_U pass for every witness
  std::uint64_t samples = 0;
};

struct CtReport {
  std::vector<CtRow> rows;
  bool all_pass() const;
};

CtReport validate_ct_lambda(const Budget& b, std::uint64_t max_x = 50);
MatrixReport validate_ct(const Budget& b, std::uint64_t max_x = 20);

// Lemma: n realizes phi in Kleene's sense iff n realizes its embedding.
struct LemmaRealizReport {
  std::uint64_t formulas = 0;
  std::uint64_t decided_pairs = 0;
  std::uint64_t disagreements = 0;
  std::vector<std::string> failures;
};

LemmaRealizReport lemma_realiz_suite(std::uint64_t seed, std::uint64_t formulas,
                                     std::uint64_t samples_per_formula,
                                     const Budget& b);

// Part (a) of the lemma: the interpretation of an embedded closed HA term
// evaluates to the term's arithmetic value.
Verdict lemma_term_check(const HaTerm& t, const Budget& b);

HaFormula gen_ha_formula(std::uint64_t& state, const std::vector<std::string>& scope,
                         int depth);

}  // namespace mtt::principles

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mtt/nat.hpp"

namespace mtt::pca {

// The concrete Kleene model. Every natural number decodes to a program;
// Kleene application {e}(x) decodes e and runs a call-by-value machine
// with a step budget.

enum class PrimId {
  Succ, Pair, P1, P2, Ite, Cnc, Rec, ListRec, Lh, Comp, TraceOf,
};

constexpr int kNumPrims = 11;

int prim_arity(PrimId p);
const char* prim_name(PrimId p);

struct ProgramNode;
using Program = std::shared_ptr<const ProgramNode>;

enum class ProgKind { Const, Var, App, Lam, Prim };

struct ProgramNode {
  ProgKind kind;
  Nat value;        // Const
  int index = 0;    // Var (de Bruijn)
  Program fun, arg; // App
  Program body;     // Lam
  PrimId prim = PrimId::Succ;
};

Program make_const(Nat v);
Program make_const(std::uint64_t v);
Program make_var(int index);
Program make_app(Program f, Program a);
Program make_lam(Program body);
Program make_prim(PrimId p);

// Left-folded application spine {f}(a1,...,an).
Program make_apps(Program f, const std::vector<Program>& args);

bool is_closed(const Program& p);
bool structurally_equal(const Program& a, const Program& b);

// Goedel numbering: total decode, structural round trip for encode.
Nat encode(const Program& p);
Program decode(const Nat& n);

// Kleene-style rendering: {p}(12,{p}(x,y)), Lx.body. Variable names are
// drawn from `names` outermost-first; deeper binders get v0, v1, ...
std::string to_string(const Program& p, const std::vector<std::string>& names = {});

struct EvalResult {
  bool converged = false;
  Nat value;       // meaningful when converged
  Nat steps;       // contractions performed (when converged)
  std::uint64_t fuel_left = 0;
};

// Runs a closed program to a value. Open programs never converge.
EvalResult run(const Program& p, std::uint64_t fuel);

EvalResult apply(const Nat& e, const Nat& x, std::uint64_t fuel);
EvalResult apply_many(const Nat& e, const std::vector<Nat>& args, std::uint64_t fuel);

// Cached Kleene application for semantic queries that only need the result.
// Converged values are remembered; divergence is remembered per fuel tried,
// so a larger budget still re-runs.
std::optional<Nat> apply_cached(const Nat& e, const Nat& x, std::uint64_t fuel);

// Cantor pairing (x+y)(x+y+1)/2 + y with its projections.
Nat pair(const Nat& x, const Nat& y);
Nat proj1(const Nat& n);
Nat proj2(const Nat& n);
std::pair<Nat, Nat> unpair(const Nat& n);

// s-m-n: the code of a one-free-variable body as a function of that variable.
// Throws std::invalid_argument if the body mentions variables beyond the
// binders it declares.
Nat lam(const Program& body_with_one_free_var);

// Literal program substitution of a closed value for the outermost free
// variable (de Bruijn index 0 at top level).
Program substitute_outer(const Program& body, const Program& closed_value);

EvalResult rec_apply(const Nat& n, const Nat& m, const Nat& k, std::uint64_t fuel);
EvalResult listrec_apply(const Nat& n, const Nat& m, const Nat& l, std::uint64_t fuel);

// List coding: empty = 0, cnc(k,x) = pair(k,x)+1.
Nat list_empty();
Nat list_cnc(const Nat& k, const Nat& x);
Nat list_lh(const Nat& n);
Nat list_component(const Nat& n, const Nat& j);  // throws std::out_of_range
std::vector<Nat> list_elements(const Nat& n);
Nat list_of(const std::vector<Nat>& xs);

// A converging machine run: the step sequence of configurations, each a
// whole-program code, last one a value.
struct Trace {
  std::vector<Nat> configs;
  Nat output;
  Nat code() const;
};

std::optional<Trace> trace_of(const Nat& e, const Nat& x, std::uint64_t fuel);

// Kleene's T predicate and result extraction U. T checks that u codes the
// exact halting step sequence of {e}(x); malformed codes are just false.
bool kleene_T(const Nat& e, const Nat& x, const Nat& u, std::uint64_t fuel);
Nat kleene_U(const Nat& u);

// Convenience numerals for the named combinators.
Nat code_of_prim(PrimId p);

}  // namespace mtt::pca

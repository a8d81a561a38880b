#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtt/nat.hpp"
#include "mtt/setcodes.hpp"
#include "mtt/syntax.hpp"
#include "mtt/verdict.hpp"

namespace mtt::realizability {

// Assignment of naturals to the free variables of the expression under query.
using SemEnv = std::map<std::string, Nat>;

// What we can tell about the members of an interpreted type.
struct Carrier {
  enum Kind { Empty, Finite, NumericUnbounded, Opaque } kind = Opaque;
  std::vector<Nat> elems;  // exhaustive when kind == Finite
  bool numeric = false;    // equivalence coincides with numeric equality

  bool complete() const { return kind == Empty || kind == Finite; }
  const char* name() const {
    switch (kind) {
      case Empty: return "empty";
      case Finite: return "finite";
      case NumericUnbounded: return "numeric-unbounded";
      case Opaque: return "opaque";
    }
    return "?";
  }
};

// Evaluates the interpretation of a term under an environment to a numeral.
std::optional<Nat> eval_term(const syntax::Term& t, const SemEnv& env,
                             const Budget& b);

Carrier classify_carrier(const syntax::TypeExpr& a, const SemEnv& env,
                         const Budget& b);

// n realizes a (small) proposition.
Verdict realizes(const Nat& n, const syntax::TypeExpr& phi, const SemEnv& env,
                 const Budget& b);

// n eps J(A) for sets and collections (coincides with realizes on
// propositions).
Verdict member(const Nat& n, const syntax::TypeExpr& a, const SemEnv& env,
               const Budget& b);

// n ~_{I(A)} m.
Verdict equiv(const Nat& n, const Nat& m, const syntax::TypeExpr& a,
              const SemEnv& env, const Budget& b);

// Membership in A -> prop_s.
Verdict member_funtoprops(const Nat& n, const syntax::TypeExpr& a,
                          const SemEnv& env, const Budget& b);

// n ~_{I(prop_s)} m on two small-proposition codes: same realizer sets.
Verdict equiv_props_codes(const Nat& u, const Nat& v, const Budget& b);

}  // namespace mtt::realizability

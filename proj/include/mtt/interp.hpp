#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mtt/pca.hpp"
#include "mtt/syntax.hpp"

namespace mtt::interp {

// The compiler from mTT^s terms to programs of the Kleene model.
// Free variables of the term become free machine variables; `scope` lists
// the admissible names outermost-first.
pca::Program interpret(const syntax::Term& t, const std::vector<std::string>& scope = {});

// I(t[x1,...,xn]) = Lx1...Lxn. I(t), a closed program.
pca::Program interpret_in_context(const syntax::Term& t,
                                  const std::vector<std::string>& ctx_vars);

// Code of the interpretation of a term in context.
Nat code_in_context(const syntax::Term& t, const std::vector<std::string>& ctx_vars);

// Set-code tags: N0/N1/N share 1, Pi 2, Sigma 3, + 4, List 5, Bot 6,
// And 7, Or 8, Imp 9, Exists 10, Forall 11, Id 12. Small propositions are
// exactly the tags above 5.
int set_code_tag(syntax::TypeKind k);
bool small_prop_tag(int tag);

// One schematic conversion fact. The right-hand side is a term with named
// holes plus the terms to substitute; substitution happens at the machine
// level with evaluated numerals, which is how substitution into a
// Lambda-term reads (through s-m-n) in the target theory.
struct ConversionInstance {
  syntax::Term lhs;
  syntax::Term rhs_body;                 // free rhs_binders
  std::vector<std::string> rhs_binders;  // outermost-first
  std::vector<syntax::Term> rhs_args;    // substituted for the binders
};

struct ConversionSchema {
  std::string name;
  // Extra variables each generated piece may mention, in piece order.
  std::vector<std::vector<std::string>> piece_scopes;
  std::function<ConversionInstance(const std::vector<syntax::Term>&)> instantiate;
};

const std::vector<ConversionSchema>& conversion_pairs();

// The two programs of an instance: I(lhs) and I(body)[values of I(args)].
// Evaluation of a substituent may diverge, in which case the right side is
// reported divergent (Kleene terms are strict).
struct ConversionPrograms {
  pca::Program lhs;
  bool rhs_defined = false;
  pca::Program rhs;
};

ConversionPrograms compile_conversion(const ConversionInstance& inst,
                                      std::uint64_t fuel);

// Term-level display form of the right-hand side.
syntax::Term conversion_rhs_term(const ConversionInstance& inst);

}  // namespace mtt::interp

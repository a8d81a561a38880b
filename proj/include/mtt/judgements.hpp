#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtt/pca.hpp"
#include "mtt/realizability.hpp"
#include "mtt/syntax.hpp"
#include "mtt/verdict.hpp"

namespace mtt::judgements {

// A judgement's interpreting first-order formula, kept alongside the
// judgement itself; `rendered` is the display form.
struct SemFormula {
  syntax::Judgement j;
  std::string rendered;
};

SemFormula interpret_judgement(const syntax::Judgement& j);
Verdict check_judgement(const syntax::Judgement& j, const Budget& b);

// A ==. B under paired environments: A t A s (t ~_A s <-> t ~_B s).
Verdict doteq(const syntax::TypeExpr& a, const realizability::SemEnv& env_a,
              const syntax::TypeExpr& b, const realizability::SemEnv& env_b,
              const Budget& budget);

// Deterministic generator of well-scoped untyped terms.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : state_(seed) {}
  syntax::Term gen(const std::vector<std::string>& scope, int size);
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

enum class PairOutcome { AgreedValue, AgreedDivergent, Disagreed, Undecided };

PairOutcome compare_programs(const pca::Program& lhs, const pca::Program& rhs,
                             std::uint64_t fuel);

struct SchemaReport {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t agreed_value = 0;
  std::uint64_t agreed_divergent = 0;
  std::uint64_t disagreed = 0;
  std::uint64_t undecided = 0;
};

struct ConversionReport {
  std::vector<SchemaReport> schemas;
  std::uint64_t total() const;
  std::uint64_t disagreements() const;
  std::uint64_t undecided() const;
};

ConversionReport run_conversion_suite(std::uint64_t seed, std::uint64_t size_per_schema,
                                      const Budget& b);

// eval(I(t)[I(a)/x]) vs eval(I(t[a/x])), a closed.
Verdict check_substitution(const syntax::Term& t, const std::string& x,
                           const syntax::Term& a, const Budget& b);

struct SubstReport {
  std::uint64_t instances = 0;
  std::uint64_t agreed = 0;
  std::uint64_t disagreed = 0;
  std::uint64_t undecided = 0;
};

SubstReport run_substitution_suite(std::uint64_t seed, std::uint64_t count,
                                   const Budget& b);

// Coding condition: Set(I(hat A)) and agreement of semantic membership and
// equality with the fix-point predicates on the code, on decided samples.
Verdict check_coding(const syntax::TypeExpr& a, const realizability::SemEnv& env,
                     const Budget& b);

struct CorpusEntry {
  Truth expect;
  std::string text;
  syntax::Judgement j;
  int line;
};

std::vector<CorpusEntry> load_corpus(const std::string& path);

struct CorpusReport {
  std::uint64_t total = 0;
  std::uint64_t as_expected = 0;
  std::uint64_t hard_failures = 0;   // expected holds/unknown but got fails
  std::uint64_t unknowns = 0;        // verdicts that came out unknown
  std::vector<std::string> failures;
};

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, const Budget& b);

}  // namespace mtt::judgements

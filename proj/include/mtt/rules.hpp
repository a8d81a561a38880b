#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mtt/syntax.hpp"

namespace mtt::rules {

// A derivation-tree statement: a judgement, or a context-formation claim.
struct Statement {
  bool is_cont = false;
  syntax::Context ctx;      // cont form
  syntax::Judgement j;      // judgement form
};

struct DerivationNode {
  std::string rule;
  Statement conclusion;
  std::vector<DerivationNode> premises;
};

struct RuleSchema {
  std::string name;
  std::string display;
  // Checks one node whose premises are assumed structurally valid.
  std::function<std::optional<std::string>(const DerivationNode&)> check;
};

const std::vector<RuleSchema>& rule_table();
const RuleSchema* find_rule(const std::string& name);

struct CheckError {
  std::vector<int> path;  // premise indices from the root
  std::string rule;
  std::string message;
  std::string to_string() const;
};

// nullopt on success.
std::optional<CheckError> check_derivation(const DerivationNode& d);

// Text format: (rule-name "statement" premise*), statements in the term
// grammar, context-formation statements written  cont [x in A, ...].
DerivationNode parse_derivation(std::string_view text);
std::vector<DerivationNode> parse_derivation_file(const std::string& path);
std::string to_string(const DerivationNode& d, int indent = 0);

}  // namespace mtt::rules

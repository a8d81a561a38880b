#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtt/interp.hpp"
#include "mtt/judgements.hpp"
#include "mtt/pca.hpp"
#include "mtt/principles.hpp"
#include "mtt/realizability.hpp"
#include "mtt/rules.hpp"
#include "mtt/setcodes.hpp"
#include "mtt/syntax.hpp"
#include "mtt/verdict.hpp"

using json = nlohmann::ordered_json;
using namespace mtt;

namespace {

struct RunConfig {
  std::uint64_t fuel = 100000;
  std::uint64_t enum_bound = 64;
  std::uint32_t depth = 32;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool strict = false;
  std::string in_file;
  std::vector<std::string> binds;

  Budget budget() const { return Budget{depth, enum_bound, fuel}; }
  bool is_json() const { return format == "json"; }
};

// Overall outcome folds every reported verdict: any failure wins, then
// unknown, then success.
struct Outcome {
  bool any_fails = false;
  bool any_unknown = false;
  void fold(const Verdict& v) {
    if (v.fails()) any_fails = true;
    if (v.unknown()) any_unknown = true;
  }
  int exit_code(bool strict) const {
    if (any_fails) return 1;
    if (any_unknown && strict) return 2;
    return 0;
  }
};

std::string read_input(const RunConfig& cfg, const std::string& positional) {
  if (!positional.empty()) return positional;
  if (!cfg.in_file.empty()) {
    std::ifstream in(cfg.in_file);
    if (!in) throw std::runtime_error("cannot open input file: " + cfg.in_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::stringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

realizability::SemEnv parse_binds(const std::vector<std::string>& binds) {
  realizability::SemEnv env;
  for (const auto& b : binds) {
    std::size_t eq = b.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("bad --bind (expected name=numeral): " + b);
    env.insert_or_assign(trim(b.substr(0, eq)),
                         Nat::from_string(trim(b.substr(eq + 1))));
  }
  return env;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.is_json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json verdict_json(const Verdict& v) {
  json j;
  j["verdict"] = to_string(v.truth);
  if (v.unknown()) j["reason"] = to_string(v.why);
  j["work"] = v.work;
  return j;
}

// --- subcommands -----------------------------------------------------------

int cmd_parse(const RunConfig& cfg, const std::string& input, const std::string& kind) {
  std::string text = trim(read_input(cfg, input));
  json out;
  out["schema"] = 1;
  std::string pretty, actual;
  if (kind == "term" || kind == "auto") {
    try {
      pretty = syntax::to_string(syntax::parse_term(text));
      actual = "term";
    } catch (const syntax::ParseError&) {
      if (kind == "term") throw;
    }
  }
  if (actual.empty() && (kind == "judgement" || kind == "auto")) {
    try {
      pretty = syntax::to_string(syntax::parse_judgement(text));
      actual = "judgement";
    } catch (const syntax::ParseError&) {
      if (kind == "judgement") throw;
    }
  }
  if (actual.empty() && (kind == "type" || kind == "auto")) {
    pretty = syntax::to_string(syntax::parse_type(text));
    actual = "type";
  }
  out["kind"] = actual;
  out["pretty"] = pretty;
  emit(cfg, out, pretty + "\n");
  return 0;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

int cmd_interp(const RunConfig& cfg, const std::string& input, const std::string& ctx) {
  std::string text = trim(read_input(cfg, input));
  syntax::Term t = syntax::parse_term(text);
  std::vector<std::string> ctx_vars = split_commas(ctx);
  pca::Program p = interp::interpret_in_context(t, ctx_vars);
  std::string pretty = pca::to_string(p, ctx_vars);
  Nat code = pca::encode(p);
  json out;
  out["schema"] = 1;
  out["term"] = syntax::to_string(t);
  out["program"] = pretty;
  out["code"] = code.to_string();
  emit(cfg, out, pretty + "\n");
  return 0;
}

int cmd_eval(const RunConfig& cfg, const std::string& input, const std::string& code,
             const std::string& args) {
  json out;
  out["schema"] = 1;
  pca::EvalResult r;
  if (!code.empty()) {
    std::vector<Nat> argv;
    for (const auto& a : split_commas(args)) argv.push_back(Nat::from_string(a));
    r = pca::apply_many(Nat::from_string(code), argv, cfg.fuel);
  } else {
    syntax::Term t = syntax::parse_term(trim(read_input(cfg, input)));
    r = pca::run(interp::interpret(t), cfg.fuel);
  }
  out["converged"] = r.converged;
  if (r.converged) {
    out["value"] = r.value.to_string();
    out["steps"] = r.steps.to_string();
    emit(cfg, out, r.value.to_string() + "\n");
    return 0;
  }
  emit(cfg, out, "diverged (fuel exhausted)\n");
  return cfg.strict ? 2 : 0;
}

int cmd_check(const RunConfig& cfg, const std::vector<std::string>& query) {
  if (query.empty()) throw CLI::ValidationError("check", "missing query");
  Budget b = cfg.budget();
  realizability::SemEnv env = parse_binds(cfg.binds);
  const std::string& op = query[0];
  Verdict v;
  json out;
  out["schema"] = 1;
  out["query"] = op;
  if (op == "realizes" && query.size() == 3) {
    Nat n = Nat::from_string(query[1]);
    v = realizability::realizes(n, syntax::parse_type(query[2]), env, b);
  } else if (op == "member" && query.size() == 3) {
    Nat n = Nat::from_string(query[1]);
    v = realizability::member(n, syntax::parse_type(query[2]), env, b);
  } else if (op == "equiv" && query.size() == 4) {
    Nat n = Nat::from_string(query[1]);
    Nat m = Nat::from_string(query[2]);
    v = realizability::equiv(n, m, syntax::parse_type(query[3]), env, b);
  } else if (op == "judgement" && query.size() == 2) {
    v = judgements::check_judgement(syntax::parse_judgement(query[1]), b);
  } else {
    throw CLI::ValidationError(
        "check", "expected: realizes n 'phi' | member n 'A' | equiv n m 'A' | "
                 "judgement 'J'");
  }
  out.update(verdict_json(v));
  emit(cfg, out, to_string(v) + "\n");
  Outcome oc;
  oc.fold(v);
  return oc.exit_code(cfg.strict);
}

int cmd_setcode(const RunConfig& cfg, const std::vector<std::string>& query) {
  if (query.empty()) throw CLI::ValidationError("setcode", "missing query");
  Budget b = cfg.budget();
  auto& eng = setcodes::engine();
  const std::string& op = query[0];
  Verdict v;
  if (op == "set" && query.size() == 2) {
    v = eng.is_set_code(Nat::from_string(query[1]), b);
  } else if (op == "mem" && query.size() == 3) {
    v = eng.member(Nat::from_string(query[1]), Nat::from_string(query[2]), b);
  } else if (op == "notmem" && query.size() == 3) {
    v = eng.not_member(Nat::from_string(query[1]), Nat::from_string(query[2]), b);
  } else if (op == "eq" && query.size() == 4) {
    v = eng.eq(Nat::from_string(query[1]), Nat::from_string(query[2]),
               Nat::from_string(query[3]), b);
  } else if (op == "neq" && query.size() == 4) {
    v = eng.neq(Nat::from_string(query[1]), Nat::from_string(query[2]),
                Nat::from_string(query[3]), b);
  } else if (op == "fam" && query.size() == 3) {
    v = eng.fam(Nat::from_string(query[1]), Nat::from_string(query[2]), b);
  } else {
    throw CLI::ValidationError(
        "setcode", "expected: set n | mem t n | notmem t n | eq t s n | "
                   "neq t s n | fam m n");
  }
  json out;
  out["schema"] = 1;
  out["query"] = op;
  out.update(verdict_json(v));
  emit(cfg, out, to_string(v) + "\n");
  Outcome oc;
  oc.fold(v);
  return oc.exit_code(cfg.strict);
}

const std::vector<std::string>& coding_corpus() {
  static const std::vector<std::string> sets = {
      "N0", "N1", "N", "N1 + N1", "N + N", "N1 + N", "List(N0)", "List(N1)",
      "List(N1 + N1)", "Sig (x in N1) N1", "Sig (x in N1 + N1) N1",
      "Pi (x in N1) N1", "Pi (x in N0) N", "Pi (x in N1) N",
      "Bot", "Id(N, 0, 0)", "Id(N1, star, star)", "Bot \\/ Id(N, 0, 0)",
      "Id(N, 0, 0) /\\ Id(N, 1, 1)", "Ex (x in N1) Id(N1, x, star)",
      "All (x in N1) Id(N1, x, x)", "Sig (x in N1) List(N0)",
  };
  return sets;
}

int cmd_suite(const RunConfig& cfg, const std::string& which, std::uint64_t size,
              const std::string& corpus_path) {
  Budget b = cfg.budget();
  json out;
  out["schema"] = 1;
  out["suite"] = which;
  Outcome oc;
  std::ostringstream text;
  if (which == "conversions") {
    auto rep = judgements::run_conversion_suite(cfg.seed, size, b);
    json rows = json::array();
    for (const auto& s : rep.schemas) {
      rows.push_back({{"schema", s.name},
                      {"instances", s.instances},
                      {"agreed_value", s.agreed_value},
                      {"agreed_divergent", s.agreed_divergent},
                      {"disagreed", s.disagreed},
                      {"undecided", s.undecided}});
      text << s.name << ": " << s.instances << " instances, " << s.disagreed
           << " disagreements, " << s.undecided << " undecided\n";
    }
    out["rows"] = rows;
    out["total"] = rep.total();
    out["disagreements"] = rep.disagreements();
    out["undecided"] = rep.undecided();
    text << "total " << rep.total() << ", disagreements " << rep.disagreements()
         << ", undecided " << rep.undecided() << "\n";
    if (rep.disagreements() > 0) oc.any_fails = true;
    else if (rep.undecided() > 0) oc.any_unknown = true;
  } else if (which == "substitution") {
    auto rep = judgements::run_substitution_suite(cfg.seed, size, b);
    out["instances"] = rep.instances;
    out["agreed"] = rep.agreed;
    out["disagreed"] = rep.disagreed;
    out["undecided"] = rep.undecided;
    text << "substitution: " << rep.instances << " instances, " << rep.disagreed
         << " disagreements, " << rep.undecided << " undecided\n";
    if (rep.disagreed > 0) oc.any_fails = true;
    else if (rep.undecided > 0) oc.any_unknown = true;
  } else if (which == "coding") {
    json rows = json::array();
    realizability::SemEnv env;
    for (const auto& s : coding_corpus()) {
      Verdict v = judgements::check_coding(syntax::parse_type(s), env, b);
      oc.fold(v);
      rows.push_back({{"set", s}, {"verdict", to_string(v.truth)}});
      text << s << ": " << to_string(v) << "\n";
    }
    out["rows"] = rows;
  } else if (which == "corpus") {
    auto entries = judgements::load_corpus(corpus_path);
    auto rep = judgements::run_corpus(entries, b);
    out["total"] = rep.total;
    out["as_expected"] = rep.as_expected;
    out["hard_failures"] = rep.hard_failures;
    out["unknowns"] = rep.unknowns;
    json fails = json::array();
    for (const auto& f : rep.failures) fails.push_back(f);
    out["mismatches"] = fails;
    text << "corpus: " << rep.total << " judgements, " << rep.as_expected
         << " as expected, " << rep.hard_failures << " hard failures, "
         << rep.unknowns << " unknown\n";
    for (const auto& f : rep.failures) text << "  " << f << "\n";
    if (rep.hard_failures > 0 || rep.as_expected != rep.total) oc.any_fails = true;
  } else {
    throw CLI::ValidationError("suite",
                               "--which must be conversions|substitution|coding|corpus");
  }
  emit(cfg, out, text.str());
  return oc.exit_code(cfg.strict);
}

int cmd_realize(const RunConfig& cfg, const std::string& principle, bool validate) {
  Budget b = cfg.budget();
  json out;
  out["schema"] = 1;
  out["principle"] = principle;
  Outcome oc;
  std::ostringstream text;
  Nat numeral;
  if (principle == "extfun") numeral = principles::extfun_realizer();
  else if (principle == "ac") numeral = principles::ac_realizer();
  else if (principle == "ac-unique") numeral = principles::ac_unique_realizer();
  else if (principle == "ct-lambda") numeral = principles::ct_lambda_realizer();
  else if (principle == "ct") numeral = principles::ct_realizer();
  else
    throw CLI::ValidationError("realize",
                               "--principle must be extfun|ac|ac-unique|ct-lambda|ct");
  out["numeral"] = numeral.to_string();
  out["program"] = pca::to_string(pca::decode(numeral));
  text << out["program"].get<std::string>() << "\n" << numeral.to_string() << "\n";
  if (validate) {
    json rows = json::array();
    auto add_matrix = [&](const principles::MatrixReport& rep) {
      for (const auto& r : rep.rows) {
        oc.fold(r.verdict);
        rows.push_back({{"instance", r.name},
                        {"verdict", to_string(r.verdict.truth)},
                        {"note", r.note}});
        text << r.name << ": " << to_string(r.verdict)
             << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
      }
    };
    if (principle == "extfun") add_matrix(principles::validate_extfun(b));
    if (principle == "ac") add_matrix(principles::validate_ac(b));
    if (principle == "ac-unique") add_matrix(principles::validate_ac_unique(b));
    if (principle == "ct") add_matrix(principles::validate_ct(b));
    if (principle == "ct-lambda") {
      auto rep = principles::validate_ct_lambda(b);
      for (const auto& r : rep.rows) {
        bool okrow = r.extracted_agrees && r.witnesses_pass;
        if (!okrow) oc.any_fails = true;
        rows.push_back({{"function", r.name},
                        {"extracted_agrees", r.extracted_agrees},
                        {"witnesses_pass", r.witnesses_pass},
                        {"samples", r.samples}});
        text << r.name << ": " << (okrow ? "ok" : "FAILED") << " ("
             << r.samples << " samples)\n";
      }
    }
    out["validation"] = rows;
  }
  emit(cfg, out, text.str());
  return oc.exit_code(cfg.strict);
}

int cmd_derive(const RunConfig& cfg, const std::string& path) {
  auto nodes = rules::parse_derivation_file(path);
  json out;
  out["schema"] = 1;
  out["file"] = path;
  json rows = json::array();
  std::ostringstream text;
  bool any_bad = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto err = rules::check_derivation(nodes[i]);
    std::string concl = nodes[i].conclusion.is_cont
                            ? "cont [...]"
                            : syntax::to_string(nodes[i].conclusion.j);
    if (err) {
      any_bad = true;
      rows.push_back({{"index", i}, {"conclusion", concl}, {"ok", false},
                      {"error", err->to_string()}});
      text << i << ": " << concl << " REJECTED: " << err->to_string() << "\n";
    } else {
      rows.push_back({{"index", i}, {"conclusion", concl}, {"ok", true}});
      text << i << ": " << concl << " ok\n";
    }
  }
  out["derivations"] = rows;
  out["ok"] = !any_bad;
  emit(cfg, out, text.str());
  return any_bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability workbench for the intensional Minimalist Foundation "
               "over the Kleene applicative structure"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--fuel", cfg.fuel, "machine step budget");
  app.add_option("--enum-bound", cfg.enum_bound, "quantifier enumeration bound");
  app.add_option("--depth", cfg.depth, "fix-point unfolding depth");
  app.add_option("--seed", cfg.seed, "generator seed");
  app.add_option("--format", cfg.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", cfg.strict, "exit 2 on unknown-only outcomes");
  app.add_option("--in", cfg.in_file, "input file (default stdin)");
  app.add_option("--bind", cfg.binds, "environment binding name=numeral");

  std::string parse_input, parse_kind = "auto";
  auto* parse_cmd = app.add_subcommand("parse", "parse and pretty-print");
  parse_cmd->add_option("text", parse_input, "input text");
  parse_cmd->add_option("--kind", parse_kind, "term|type|judgement|auto");

  std::string interp_input, interp_ctx;
  auto* interp_cmd = app.add_subcommand("interp", "compile a term to a program");
  interp_cmd->add_option("text", interp_input, "term text");
  interp_cmd->add_option("--ctx", interp_ctx, "context variables, comma separated");

  std::string eval_input, eval_code, eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a closed term or apply a code");
  eval_cmd->add_option("text", eval_input, "term text");
  eval_cmd->add_option("--code", eval_code, "program code (decimal)");
  eval_cmd->add_option("--args", eval_args, "application arguments, comma separated");

  std::vector<std::string> check_query;
  auto* check_cmd = app.add_subcommand("check", "semantic relations on types");
  check_cmd->add_option("query", check_query, "realizes n phi | member n A | equiv n m A | judgement J");

  std::vector<std::string> setcode_query;
  auto* setcode_cmd = app.add_subcommand("setcode", "fix-point predicates on codes");
  setcode_cmd->add_option("query", setcode_query, "set n | mem t n | notmem t n | eq t s n | neq t s n | fam m n");

  std::string suite_which = "conversions", suite_corpus = "data/corpus_judgements.txt";
  std::uint64_t suite_size = 100;
  auto* suite_cmd = app.add_subcommand("suite", "property suites and regressions");
  suite_cmd->add_option("--which", suite_which, "conversions|substitution|coding|corpus");
  suite_cmd->add_option("--size", suite_size, "instances per schema");
  suite_cmd->add_option("--corpus", suite_corpus, "corpus file for --which corpus");

  std::string principle = "extfun";
  bool validate = false;
  auto* realize_cmd = app.add_subcommand("realize", "concrete realizers");
  realize_cmd->add_option("--principle", principle, "extfun|ac|ac-unique|ct-lambda|ct");
  realize_cmd->add_flag("--validate", validate, "run the instance matrix");

  std::string derive_file;
  auto* derive_cmd = app.add_subcommand("derive", "check derivation trees");
  derive_cmd->add_option("--check", derive_file, "derivation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(cfg, parse_input, parse_kind);
    if (interp_cmd->parsed()) return cmd_interp(cfg, interp_input, interp_ctx);
    if (eval_cmd->parsed()) return cmd_eval(cfg, eval_input, eval_code, eval_args);
    if (check_cmd->parsed()) return cmd_check(cfg, check_query);
    if (setcode_cmd->parsed()) return cmd_setcode(cfg, setcode_query);
    if (suite_cmd->parsed()) return cmd_suite(cfg, suite_which, suite_size, suite_corpus);
    if (realize_cmd->parsed()) return cmd_realize(cfg, principle, validate);
    if (derive_cmd->parsed()) return cmd_derive(cfg, derive_file);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const syntax::ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}

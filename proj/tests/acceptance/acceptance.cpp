// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mtt/interp.hpp"
#include "mtt/judgements.hpp"
#include "mtt/pca.hpp"
#include "mtt/principles.hpp"
#include "mtt/realizability.hpp"
#include "mtt/rules.hpp"
#include "mtt/setcodes.hpp"
#include "mtt/syntax.hpp"

using namespace mtt;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::uint64_t mix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

const Budget kBudget{32, 64, 100000};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
             .count() /
         1000.0;
}

// --- criterion 1: PCA laws --------------------------------------------------

void criterion1() {
  auto t0 = Clock::now();
  bool pairing_ok = true;
  for (std::uint64_t x = 0; x <= 2000 && pairing_ok; ++x)
    for (std::uint64_t y = 0; y <= 2000; ++y) {
      Nat p = pca::pair(Nat(x), Nat(y));
      if (!(pca::proj1(p) == Nat(x)) || !(pca::proj2(p) == Nat(y))) {
        pairing_ok = false;
        break;
      }
    }
  for (std::uint64_t n = 0; n <= 2000 && pairing_ok; ++n)
    if (!(pca::pair(pca::proj1(Nat(n)), pca::proj2(Nat(n))) == Nat(n)))
      pairing_ok = false;

  // rec / listrec defining equations on 1000 random triples
  std::uint64_t s = 2024;
  bool rec_ok = true;
  Nat step = pca::encode(pca::make_lam(pca::make_lam(
      pca::make_app(pca::make_prim(pca::PrimId::Succ), pca::make_var(0)))));
  Nat lstep = pca::encode(pca::make_lam(pca::make_lam(pca::make_lam(
      pca::make_app(pca::make_prim(pca::PrimId::Succ), pca::make_var(0))))));
  for (int i = 0; i < 500 && rec_ok; ++i) {
    Nat n(mix(s) % 50), k(mix(s) % 30);
    if (!(pca::rec_apply(n, step, Nat(0), 100000).value == n)) rec_ok = false;
    Nat k1 = k + Nat(1);
    pca::EvalResult lhs = pca::rec_apply(n, step, k1, 100000);
    pca::EvalResult inner = pca::rec_apply(n, step, k, 100000);
    pca::EvalResult rhs = pca::apply_many(step, {k, inner.value}, 100000);
    if (!lhs.converged || !rhs.converged || !(lhs.value == rhs.value))
      rec_ok = false;
  }
  for (int i = 0; i < 500 && rec_ok; ++i) {
    Nat k = pca::list_of({Nat(mix(s) % 9), Nat(mix(s) % 9)});
    Nat x(mix(s) % 9), n(mix(s) % 9);
    if (!(pca::listrec_apply(n, lstep, Nat(0), 100000).value == n)) rec_ok = false;
    pca::EvalResult lhs = pca::listrec_apply(n, lstep, pca::list_cnc(k, x), 100000);
    pca::EvalResult inner = pca::listrec_apply(n, lstep, k, 100000);
    pca::EvalResult rhs = pca::apply_many(lstep, {k, x, inner.value}, 100000);
    if (!lhs.converged || !rhs.converged || !(lhs.value == rhs.value))
      rec_ok = false;
  }

  // s-m-n observational agreement on 500 generated one-variable bodies
  bool smn_ok = true;
  int smn_count = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<pca::Program> pool;
    pool.push_back(pca::make_var(0));
    pool.push_back(pca::make_const(mix(s) % 9));
    for (int d = 0; d < 5; ++d) {
      pca::Program a = pool[mix(s) % pool.size()];
      pca::Program b = pool[mix(s) % pool.size()];
      switch (mix(s) % 5) {
        case 0: pool.push_back(pca::make_app(pca::make_prim(pca::PrimId::Succ), a)); break;
        case 1: pool.push_back(pca::make_apps(pca::make_prim(pca::PrimId::Pair), {a, b})); break;
        case 2: pool.push_back(pca::make_app(pca::make_prim(pca::PrimId::P1), a)); break;
        case 3: pool.push_back(pca::make_app(pca::make_prim(pca::PrimId::P2), a)); break;
        default: pool.push_back(pca::make_apps(pca::make_prim(pca::PrimId::Ite), {a, b, a})); break;
      }
    }
    pca::Program body = pool.back();
    Nat arg(mix(s) % 60);
    pca::EvalResult via = pca::apply(pca::lam(body), arg, 100000);
    pca::EvalResult direct =
        pca::run(pca::substitute_outer(body, pca::make_const(arg)), 100000);
    ++smn_count;
    if (via.converged != direct.converged ||
        (via.converged && !(via.value == direct.value)))
      smn_ok = false;
  }

  double dt = seconds_since(t0);
  std::ostringstream d;
  d << "pairing 0..2000 " << (pairing_ok ? "exact" : "BROKEN") << ", rec/listrec "
    << (rec_ok ? "exact on 1000 triples" : "BROKEN") << ", s-m-n " << smn_count
    << " bodies " << (smn_ok ? "exact" : "BROKEN") << ", " << dt << "s";
  report(1, "PCA laws", pairing_ok && rec_ok && smn_ok && dt < 30.0, d.str());
}

// --- criterion 2: worked example --------------------------------------------

void criterion2() {
  syntax::Term t = syntax::parse_term("Idhat(Id(N, x, x), y, z)");
  pca::Program p = interp::interpret_in_context(t, {"x", "y", "z"});
  std::string pretty = pca::to_string(p, {"x", "y", "z"});
  std::string expected =
      "Lx.Ly.Lz.{p}(12,{p}({p}(12,{p}({p}(1,2),{p}(x,x))),{p}(y,z)))";
  report(2, "worked identity-code example", pretty == expected, pretty);
}

// --- criterion 3: conversion suite -------------------------------------------

void criterion3() {
  auto t0 = Clock::now();
  judgements::ConversionReport rep = judgements::run_conversion_suite(1, 500, kBudget);
  double dt = seconds_since(t0);
  double unknown_rate = 100.0 * rep.undecided() / rep.total();
  std::ostringstream d;
  d << rep.total() << " instances, " << rep.disagreements() << " disagreements, "
    << rep.undecided() << " undecided (" << unknown_rate << "%), " << dt << "s";
  bool pass = rep.schemas.size() == 17 && rep.total() == 17 * 500 &&
              rep.disagreements() == 0 && unknown_rate < 5.0 && dt < 180.0;
  report(3, "conversion suite (17 schemas x 500)", pass, d.str());
}

// --- criterion 4: substitution commutation -----------------------------------

void criterion4() {
  judgements::SubstReport rep = judgements::run_substitution_suite(11, 1000, kBudget);
  std::ostringstream d;
  d << rep.instances << " triples, " << rep.disagreed << " disagreements, "
    << rep.undecided << " undecided";
  report(4, "substitution commutation", rep.instances == 1000 && rep.disagreed == 0,
         d.str());
}

// --- criterion 5: semantic-relation laws -------------------------------------

void criterion5() {
  using realizability::equiv;
  using realizability::member;
  const realizability::SemEnv env;
  const std::vector<const char*> corpus = {
      "N0", "N1", "N", "N1 + N1", "N1 + N", "List(N1)", "List(N0)",
      "Sig (x in N1) N1", "Sig (x in N1 + N1) N1", "Pi (x in N1) N1",
      "Pi (x in N1) N", "Bot", "Id(N, 0, 0)", "Id(N, 0, succ(0))",
      "Id(N1, star, star)", "Id(N, 0, 0) /\\ Id(N1, star, star)",
      "Bot \\/ Id(N, 0, 0)", "Id(N, 0, 0) -> Id(N, 0, 0)",
      "Ex (x in N1) Id(N1, x, star)", "All (x in N1) Id(N1, x, x)",
      "tau(N1hat)", "tau(bothat)",
  };
  const std::vector<const char*> numerical = {
      "N0", "N1", "N", "N1 + N1", "List(N1)", "Sig (x in N1) N1"};
  const std::vector<const char*> props = {
      "Bot", "Id(N, 0, 0)", "Id(N1, star, star)", "Bot \\/ Id(N, 0, 0)",
      "Id(N, 0, 0) /\\ Id(N, 0, 0)", "Ex (x in N1) Id(N1, x, star)",
      "tau(bothat)", "All (x in N1) Id(N1, x, x)"};

  std::uint64_t s = 31337;
  long refl = 0, sym = 0, tra = 0, e2m = 0, num = 0, pirr = 0;
  bool ok = true;
  for (const char* ty : corpus) {
    syntax::TypeExpr a = syntax::parse_type(ty);
    for (int i = 0; i < 45; ++i) {
      Nat n(mix(s) % 9), m(mix(s) % 9), l(mix(s) % 9);
      Verdict vm = member(n, a, env, kBudget);
      if (vm.holds()) {
        ++refl;
        if (!equiv(n, n, a, env, kBudget).holds()) ok = false;
      }
      Verdict nm = equiv(n, m, a, env, kBudget);
      if (nm.decided()) {
        ++sym;
        Verdict mn = equiv(m, n, a, env, kBudget);
        if (!mn.decided() || nm.truth != mn.truth) ok = false;
      }
      if (nm.holds()) {
        ++e2m;
        if (!member(n, a, env, kBudget).holds() ||
            !member(m, a, env, kBudget).holds())
          ok = false;
        Verdict ml = equiv(m, l, a, env, kBudget);
        if (ml.holds()) {
          ++tra;
          if (!equiv(n, l, a, env, kBudget).holds()) ok = false;
        }
      }
      if (vm.holds()) {
        ++e2m;
        if (equiv(n, n, a, env, kBudget).holds() &&
            !member(n, a, env, kBudget).holds())
          ok = false;
      }
    }
  }
  for (const char* ty : numerical) {
    syntax::TypeExpr a = syntax::parse_type(ty);
    for (int i = 0; i < 60; ++i) {
      Nat n(mix(s) % 20), m(mix(s) % 20);
      Verdict e = equiv(n, m, a, env, kBudget);
      if (e.decided()) ++num;
      if (e.holds() && !(n == m)) ok = false;
    }
  }
  for (const char* ty : props) {
    syntax::TypeExpr a = syntax::parse_type(ty);
    for (int i = 0; i < 95; ++i) {
      Nat n(mix(s) % 14), m(mix(s) % 14);
      if (member(n, a, env, kBudget).holds() &&
          member(m, a, env, kBudget).holds()) {
        ++pirr;
        if (!equiv(n, m, a, env, kBudget).holds()) ok = false;
      }
    }
  }
  // extra transitivity mass via equivalent triples on propositions (the
  // trivial relation makes every member-pair equivalent)
  for (const char* ty : props) {
    syntax::TypeExpr a = syntax::parse_type(ty);
    for (int i = 0; i < 80; ++i) {
      Nat n(mix(s) % 10), m(mix(s) % 10), l(mix(s) % 10);
      if (equiv(n, m, a, env, kBudget).holds() &&
          equiv(m, l, a, env, kBudget).holds()) {
        ++tra;
        if (!equiv(n, l, a, env, kBudget).holds()) ok = false;
      }
    }
  }
  std::ostringstream d;
  d << "reflexivity " << refl << ", symmetry " << sym << ", transitivity " << tra
    << ", equiv=>member " << e2m << ", numerical " << num << ", proof-irrelevance "
    << pirr;
  bool counts = refl >= 300 && sym >= 300 && tra >= 300 && e2m >= 300 &&
                num >= 300 && pirr >= 300;
  report(5, "semantic-relation laws (>=300 decided samples each)", ok && counts,
         d.str());
}

// --- criterion 6: validity regression ----------------------------------------

void criterion6() {
  std::string data_dir = MTTWB_DATA_DIR;
  auto entries = judgements::load_corpus(data_dir + "/corpus_judgements.txt");
  auto derivations =
      rules::parse_derivation_file(data_dir + "/derivations/corpus.drv");

  std::vector<const judgements::CorpusEntry*> derivable;
  for (const auto& e : entries)
    if (e.expect != Truth::Fails) derivable.push_back(&e);

  bool pair_ok = derivable.size() == derivations.size();
  bool derive_ok = true, match_ok = true, verdict_ok = true;
  int unknowns = 0;
  std::string first_issue;
  if (!pair_ok)
    first_issue = "derivation/judgement count mismatch";
  for (std::size_t i = 0; i < derivations.size() && pair_ok; ++i) {
    if (auto err = rules::check_derivation(derivations[i])) {
      derive_ok = false;
      if (first_issue.empty())
        first_issue = "derivation " + std::to_string(i) + ": " + err->to_string();
      continue;
    }
    if (derivations[i].conclusion.is_cont ||
        !syntax::alpha_equal(derivations[i].conclusion.j, derivable[i]->j)) {
      match_ok = false;
      if (first_issue.empty())
        first_issue = "derivation " + std::to_string(i) + " conclusion mismatch";
    }
  }
  for (const auto* e : derivable) {
    Verdict v = judgements::check_judgement(e->j, kBudget);
    if (v.fails()) {
      verdict_ok = false;
      if (first_issue.empty()) first_issue = "FAILS: " + e->text;
    }
    if (v.unknown()) ++unknowns;
  }
  std::ostringstream d;
  d << derivable.size() << " derivable judgements, " << derivations.size()
    << " accepted derivations, " << unknowns << " unknown";
  if (!first_issue.empty()) d << "; " << first_issue;
  bool pass = pair_ok && derive_ok && match_ok && verdict_ok &&
              derivable.size() >= 80 && unknowns <= 10;
  report(6, "validity regression corpus", pass, d.str());
}

// --- criterion 7: coding condition -------------------------------------------

void criterion7() {
  const std::vector<const char*> sets = {
      "N0", "N1", "N", "N1 + N1", "N + N", "N1 + N", "List(N0)", "List(N1)",
      "List(N1 + N1)", "Sig (x in N1) N1", "Sig (x in N1 + N1) N1",
      "Pi (x in N1) N1", "Pi (x in N0) N", "Pi (x in N1) N",
      "Sig (x in N1) List(N0)"};
  realizability::SemEnv env;
  bool ok = true;
  int holds = 0;
  std::string first;
  for (const char* s : sets) {
    Verdict v = judgements::check_coding(syntax::parse_type(s), env, kBudget);
    if (v.fails()) {
      ok = false;
      if (first.empty()) first = std::string("FAILS: ") + s;
    }
    if (v.holds()) ++holds;
  }
  std::ostringstream d;
  d << holds << "/" << sets.size() << " hold, zero fails";
  if (!first.empty()) d << "; " << first;
  report(7, "coding condition on corpus sets",
         ok && holds == static_cast<int>(sets.size()), d.str());
}

// --- criterion 8: principles -------------------------------------------------

void criterion8() {
  bool ok = true;
  std::ostringstream d;

  principles::MatrixReport extfun = principles::validate_extfun(kBudget);
  if (!extfun.all_holds()) ok = false;
  d << "extfun " << (extfun.all_holds() ? "holds" : "FAILED");

  principles::MatrixReport ac = principles::validate_ac(kBudget);
  if (!ac.all_holds()) ok = false;
  d << ", ac " << (ac.all_holds() ? "holds" : "FAILED");

  principles::MatrixReport acu = principles::validate_ac_unique(kBudget);
  if (!acu.all_holds()) ok = false;
  d << ", ac-unique " << (acu.all_holds() ? "holds" : "FAILED");

  principles::CtReport ct = principles::validate_ct_lambda(kBudget, 50);
  bool ct_ok = ct.all_pass() && ct.rows.size() == 10;
  if (!ct_ok) ok = false;
  d << ", ct-lambda " << (ct_ok ? "10 functions x 0..50 with T/U" : "FAILED");

  principles::MatrixReport ctg = principles::validate_ct(kBudget, 12);
  if (!ctg.all_holds()) ok = false;
  d << ", ct " << (ctg.all_holds() ? "holds" : "FAILED");

  Budget lemma_budget{32, 24, 20000};
  principles::LemmaRealizReport lr =
      principles::lemma_realiz_suite(5, 200, 10, lemma_budget);
  bool lr_ok = lr.formulas >= 200 && lr.disagreements == 0;
  if (!lr_ok) ok = false;
  d << ", kleene-vs-model " << lr.formulas << " formulas / " << lr.decided_pairs
    << " decided pairs / " << lr.disagreements << " disagreements";

  report(8, "principle realizers", ok, d.str());
}

// --- criterion 9: negative controls ------------------------------------------

void criterion9() {
  bool ok = true;
  auto xi = rules::parse_derivation(
      "(xi \"lam x. 0 = lam x. elN1(star, 0) in Pi (x in N1) N []\")");
  auto err = rules::check_derivation(xi);
  if (!err || err->message.find("unknown rule") == std::string::npos) ok = false;
  auto se = rules::parse_derivation("(E-Se \"Nhat in Set []\" (F-Se \"Set col []\"))");
  auto err2 = rules::check_derivation(se);
  if (!err2 || err2->message.find("unknown rule") == std::string::npos) ok = false;

  if (!judgements::check_judgement(syntax::parse_judgement("1 in N1 []"), kBudget)
           .fails())
    ok = false;
  syntax::TypeExpr bot = syntax::parse_type("Bot");
  realizability::SemEnv env;
  for (std::uint64_t n = 0; n < 100; ++n)
    if (!realizability::realizes(Nat(n), bot, env, kBudget).fails()) ok = false;

  report(9, "negative controls", ok,
         "xi rejected, Set-elimination rejected, 1 in N1 fails, 100 samples of "
         "falsum fail");
}

// --- criterion 10: determinism -----------------------------------------------

std::string conversion_fingerprint(std::uint64_t seed) {
  judgements::ConversionReport rep = judgements::run_conversion_suite(seed, 20, kBudget);
  std::ostringstream os;
  for (const auto& s : rep.schemas)
    os << s.name << ":" << s.instances << "," << s.agreed_value << ","
       << s.agreed_divergent << "," << s.disagreed << "," << s.undecided << ";";
  return os.str();
}

void criterion10() {
  std::string a = conversion_fingerprint(77);
  std::string b = conversion_fingerprint(77);
  std::string c = conversion_fingerprint(78);
  bool pass = a == b;
  std::ostringstream d;
  d << "same seed identical (" << (a == b ? "yes" : "NO") << "), different seed "
    << (a == c ? "identical" : "differs");
  report(10, "deterministic suite reports", pass, d.str());
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("acceptance: %d failure(s), %.1fs total\n", g_failures,
              seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}

#include "mtt/judgements.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mtt/interp.hpp"
#include "mtt/pca.hpp"
#include "mtt/setcodes.hpp"

namespace mtt::judgements {

using realizability::Carrier;
using realizability::SemEnv;
using syntax::Context;
using syntax::Judgement;
using syntax::JudgementKind;
using syntax::Term;
using syntax::TypeExpr;

namespace {

constexpr std::uint64_t kNumericSamples = 12;
constexpr std::size_t kTupleCap = 4096;

bool env_agree_on(const std::set<std::string>& vars, const SemEnv& a, const SemEnv& b) {
  for (const auto& v : vars) {
    auto ia = a.find(v), ib = b.find(v);
    if (ia == a.end() || ib == b.end()) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return true;
}

}  // namespace

namespace {
bool proof_irrelevant_stratum(const TypeExpr& t) {
  try {
    return syntax::stratum_le(syntax::stratum_of(t), syntax::Stratum::Prop);
  } catch (const syntax::StratumError&) {
    return false;
  }
}
}  // namespace

Verdict doteq(const TypeExpr& a, const SemEnv& env_a, const TypeExpr& b,
              const SemEnv& env_b, const Budget& budget) {
  if (syntax::alpha_equal(a, b)) {
    auto fv = syntax::free_vars(a);
    if (env_agree_on(fv, env_a, env_b)) return Verdict::yes();
  }
  Carrier ca = realizability::classify_carrier(a, env_a, budget);
  Carrier cb = realizability::classify_carrier(b, env_b, budget);
  // Two propositions carry the trivial equivalence on their realizer sets,
  // so fully known carriers settle the comparison outright.
  if (proof_irrelevant_stratum(a) && proof_irrelevant_stratum(b)) {
    auto known = [](const Carrier& c) {
      return c.kind == Carrier::Empty || c.kind == Carrier::Finite ||
             c.kind == Carrier::NumericUnbounded;  // all naturals
    };
    if (known(ca) && known(cb)) {
      if (ca.kind != cb.kind) return Verdict::no();
      if (ca.kind != Carrier::Finite) return Verdict::yes();
      auto norm = [](std::vector<Nat> xs) {
        std::sort(xs.begin(), xs.end(),
                  [](const Nat& x, const Nat& y) { return x < y; });
        return xs;
      };
      return norm(ca.elems) == norm(cb.elems) ? Verdict::yes() : Verdict::no();
    }
  }
  std::vector<Nat> pool;
  if (ca.kind == Carrier::Finite) pool.insert(pool.end(), ca.elems.begin(), ca.elems.end());
  if (cb.kind == Carrier::Finite) pool.insert(pool.end(), cb.elems.begin(), cb.elems.end());
  std::uint64_t raw = std::min<std::uint64_t>(budget.enum_bound, kNumericSamples);
  for (std::uint64_t i = 0; i <= raw; ++i) pool.push_back(Nat(i));
  std::sort(pool.begin(), pool.end(), [](const Nat& x, const Nat& y) { return x < y; });
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  bool exact = ca.complete() && cb.complete();
  Verdict acc = Verdict::yes(0);
  for (const Nat& t : pool)
    for (const Nat& s : pool) {
      Verdict va = realizability::equiv(t, s, a, env_a, budget);
      Verdict vb = realizability::equiv(t, s, b, env_b, budget);
      Verdict iff = v_iff(va, vb);
      if (iff.fails()) return iff;
      acc = v_and(acc, iff);
    }
  if (!exact && acc.holds()) return Verdict::maybe(Why::EnumBound);
  return acc;
}

// ---------------------------------------------------------------------------
// Context-tuple enumeration

namespace {

struct PairTuple {
  SemEnv x, y;
  Verdict guard = Verdict::yes(0);
};

// Enumerates x/y assignments with guards x_i ~_{A_i} y_i (pair form) or
// plain memberships (single form, y unused).
void enum_tuples(const Context& ctx, std::size_t i, bool pair_form,
                 const Budget& b, PairTuple cur, std::vector<PairTuple>& out,
                 bool& complete) {
  if (out.size() > kTupleCap) {
    complete = false;
    return;
  }
  if (i == ctx.size()) {
    out.push_back(std::move(cur));
    return;
  }
  const auto& [var, ty] = ctx[i];
  Carrier c = realizability::classify_carrier(ty, cur.x, b);
  auto push_pair = [&](const Nat& v, const Nat& w, Verdict g) {
    if (g.fails()) return;  // guarded out
    PairTuple next = cur;
    next.x.insert_or_assign(var, v);
    next.y.insert_or_assign(var, w);
    next.guard = v_and(next.guard, g);
    enum_tuples(ctx, i + 1, pair_form, b, std::move(next), out, complete);
  };
  switch (c.kind) {
    case Carrier::Empty:
      return;  // no assignments: quantification is vacuous
    case Carrier::Finite: {
      for (const Nat& v : c.elems) {
        if (!pair_form) {
          push_pair(v, v, realizability::member(v, ty, cur.x, b));
          continue;
        }
        for (const Nat& w : c.elems)
          push_pair(v, w, realizability::equiv(v, w, ty, cur.x, b));
      }
      return;
    }
    case Carrier::NumericUnbounded: {
      complete = false;
      std::uint64_t lim = std::min<std::uint64_t>(b.enum_bound, kNumericSamples);
      for (std::uint64_t k = 0; k <= lim; ++k) {
        Nat v(k);
        Verdict g = c.numeric ? realizability::member(v, ty, cur.x, b)
                              : realizability::member(v, ty, cur.x, b);
        if (pair_form && !c.numeric) {
          // Cannot restrict to the diagonal; sample a few off-diagonal mates.
          for (std::uint64_t k2 = 0; k2 <= lim; ++k2)
            push_pair(v, Nat(k2),
                      realizability::equiv(v, Nat(k2), ty, cur.x, b));
        } else {
          push_pair(v, v, g);
        }
      }
      return;
    }
    case Carrier::Opaque: {
      complete = false;
      std::uint64_t lim = std::min<std::uint64_t>(b.enum_bound, 8);
      for (std::uint64_t k = 0; k <= lim; ++k) {
        Nat v(k);
        if (!pair_form) {
          push_pair(v, v, realizability::member(v, ty, cur.x, b));
          continue;
        }
        for (std::uint64_t k2 = 0; k2 <= lim; ++k2)
          push_pair(v, Nat(k2), realizability::equiv(v, Nat(k2), ty, cur.x, b));
      }
      return;
    }
  }
}

Verdict quantify_ctx(const Context& ctx, bool pair_form, const Budget& b,
                     const std::function<Verdict(const SemEnv&, const SemEnv&)>& body) {
  std::vector<PairTuple> tuples;
  bool complete = true;
  enum_tuples(ctx, 0, pair_form, b, PairTuple{}, tuples, complete);
  Verdict acc = Verdict::yes(0);
  for (const auto& t : tuples) {
    Verdict inst = v_or(v_not(t.guard), body(t.x, t.y));
    if (inst.fails()) return inst;
    acc = v_and(acc, inst);
  }
  if (!complete && acc.holds()) return Verdict::maybe(Why::EnumBound);
  return acc;
}

std::optional<Nat> eval_in(const Term& t, const SemEnv& env, const Budget& b) {
  return realizability::eval_term(t, env, b);
}

}  // namespace

// ---------------------------------------------------------------------------
// Judgement checking

SemFormula interpret_judgement(const Judgement& j) {
  SemFormula f;
  f.j = j;
  std::string ctx_part;
  for (const auto& [x, ty] : j.ctx)
    ctx_part += "A " + x + " " + x + "' (" + x + " ~_{I(" + syntax::to_string(ty) +
                ")} " + x + "' -> ... ) ";
  std::ostringstream os;
  switch (j.kind) {
    case JudgementKind::TypeWf:
      os << "I(" << syntax::to_string(j.type_a) << ") ==. I("
         << syntax::to_string(j.type_a) << ")";
      break;
    case JudgementKind::TypeEq:
      os << "I(" << syntax::to_string(j.type_a) << ") ==. I("
         << syntax::to_string(j.type_b) << ")";
      break;
    case JudgementKind::TermOf:
      os << "I(" << syntax::to_string(j.term_a) << ") eps J("
         << syntax::to_string(j.of_type) << ")";
      break;
    case JudgementKind::TermEq:
      os << "I(" << syntax::to_string(j.term_a) << ") ~_{I("
         << syntax::to_string(j.of_type) << ")} I(" << syntax::to_string(j.term_b)
         << ")";
      break;
  }
  if (!j.ctx.empty()) f.rendered = "quantified over context: " + os.str();
  else f.rendered = os.str();
  return f;
}

Verdict check_judgement(const Judgement& j, const Budget& b) {
  // The stratum claim must be compatible with the syntax-directed stratum.
  if (j.kind == JudgementKind::TypeWf || j.kind == JudgementKind::TypeEq) {
    try {
      if (!syntax::stratum_le(syntax::stratum_of(j.type_a), j.stratum))
        return Verdict::no();
      if (j.kind == JudgementKind::TypeEq &&
          !syntax::stratum_le(syntax::stratum_of(j.type_b), j.stratum))
        return Verdict::no();
    } catch (const syntax::StratumError&) {
      return Verdict::no();
    }
  }
  switch (j.kind) {
    case JudgementKind::TypeWf:
      return quantify_ctx(j.ctx, true, b, [&](const SemEnv& ex, const SemEnv& ey) {
        return doteq(j.type_a, ex, j.type_a, ey, b);
      });
    case JudgementKind::TypeEq:
      return quantify_ctx(j.ctx, false, b, [&](const SemEnv& ex, const SemEnv&) {
        return doteq(j.type_a, ex, j.type_b, ex, b);
      });
    case JudgementKind::TermOf:
      return quantify_ctx(j.ctx, true, b, [&](const SemEnv& ex, const SemEnv& ey) {
        auto vx = eval_in(j.term_a, ex, b);
        auto vy = eval_in(j.term_a, ey, b);
        if (!vx || !vy) return Verdict::maybe(Why::Fuel);
        return realizability::equiv(*vx, *vy, j.of_type, ex, b);
      });
    case JudgementKind::TermEq:
      return quantify_ctx(j.ctx, false, b, [&](const SemEnv& ex, const SemEnv&) {
        auto vt = eval_in(j.term_a, ex, b);
        auto vs = eval_in(j.term_b, ex, b);
        if (!vt || !vs) return Verdict::maybe(Why::Fuel);
        return realizability::equiv(*vt, *vs, j.of_type, ex, b);
      });
  }
  return Verdict::maybe(Why::None);
}

// ---------------------------------------------------------------------------
// Term generator (deterministic splitmix-style)

std::uint64_t TermGen::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

syntax::Term TermGen::gen(const std::vector<std::string>& scope, int size) {
  using syntax::Branch;
  using syntax::t_leaf;
  using syntax::t_node;
  using syntax::t_var;
  using syntax::TermKind;
  auto pick = [&](std::uint64_t n) { return next() % n; };
  if (size <= 0) {
    switch (pick(scope.empty() ? 3 : 5)) {
      case 0: return t_leaf(TermKind::Star);
      case 1: return t_leaf(TermKind::Zero);
      case 2: return syntax::t_numeral(pick(4));
      default: return t_var(scope[pick(scope.size())]);
    }
  }
  int s2 = size / 2;
  auto sub = [&](const std::vector<std::string>& sc, int sz) { return gen(sc, sz); };
  auto with = [&](std::initializer_list<const char*> vs) {
    std::vector<std::string> sc = scope;
    for (const char* v : vs) sc.push_back(v);
    return sc;
  };
  switch (pick(22)) {
    case 0:
      if (!scope.empty()) return t_var(scope[pick(scope.size())]);
      return t_leaf(TermKind::Star);
    case 1: return t_leaf(TermKind::Zero);
    case 2: return syntax::t_numeral(pick(5));
    case 3: return t_node(TermKind::Succ, {sub(scope, size - 1)});
    case 4: return t_node(TermKind::PairSigma, {sub(scope, s2), sub(scope, s2)});
    case 5: return t_node(TermKind::PairAnd, {sub(scope, s2), sub(scope, s2)});
    case 6: return t_node(TermKind::Inl, {sub(scope, size - 1)});
    case 7: return t_node(TermKind::Inr, {sub(scope, size - 1)});
    case 8: return t_node(TermKind::IdIntro, {sub(scope, size - 1)});
    case 9: return t_leaf(TermKind::EpsList);
    case 10: return t_node(TermKind::Cons, {sub(scope, s2), sub(scope, s2)});
    case 11:
      return t_node(TermKind::Lam, {}, {Branch{{"v"}, sub(with({"v"}), size - 1)}});
    case 12:
      return t_node(TermKind::LamAll, {}, {Branch{{"v"}, sub(with({"v"}), size - 1)}});
    case 13:
      return t_node(TermKind::Ap,
                    {t_node(TermKind::Lam, {}, {Branch{{"w"}, sub(with({"w"}), s2)}}),
                     sub(scope, s2)});
    case 14: return t_node(TermKind::ElN1, {sub(scope, s2), sub(scope, s2)});
    case 15:
      return t_node(TermKind::ElN, {sub(scope, s2), sub(scope, s2)},
                    {Branch{{"y", "z"}, sub(with({"y", "z"}), s2)}});
    case 16:
      return t_node(TermKind::ElSigma, {sub(scope, s2)},
                    {Branch{{"y", "z"}, sub(with({"y", "z"}), s2)}});
    case 17:
      return t_node(TermKind::ElPlus, {sub(scope, s2)},
                    {Branch{{"y"}, sub(with({"y"}), s2)},
                     Branch{{"y"}, sub(with({"y"}), s2)}});
    case 18: return t_node(TermKind::Pi1And, {sub(scope, size - 1)});
    case 19: return t_node(TermKind::Pi2And, {sub(scope, size - 1)});
    case 20:
      switch (pick(4)) {
        case 0: return t_leaf(TermKind::HatN0);
        case 1: return t_leaf(TermKind::HatN1);
        case 2: return t_leaf(TermKind::HatN);
        default: return t_leaf(TermKind::HatBot);
      }
    case 21:
      return t_node(TermKind::HatAnd, {sub(scope, s2), sub(scope, s2)});
  }
  return t_leaf(TermKind::Star);
}

// ---------------------------------------------------------------------------
// Suites

PairOutcome compare_programs(const pca::Program& lhs, const pca::Program& rhs,
                             std::uint64_t fuel) {
  pca::EvalResult l = pca::run(lhs, fuel);
  pca::EvalResult r = pca::run(rhs, fuel);
  if (l.converged && r.converged)
    return l.value == r.value ? PairOutcome::AgreedValue : PairOutcome::Disagreed;
  if (!l.converged && !r.converged) return PairOutcome::AgreedDivergent;
  return PairOutcome::Undecided;
}

std::uint64_t ConversionReport::total() const {
  std::uint64_t n = 0;
  for (const auto& s : schemas) n += s.instances;
  return n;
}

std::uint64_t ConversionReport::disagreements() const {
  std::uint64_t n = 0;
  for (const auto& s : schemas) n += s.disagreed;
  return n;
}

std::uint64_t ConversionReport::undecided() const {
  std::uint64_t n = 0;
  for (const auto& s : schemas) n += s.undecided;
  return n;
}

ConversionReport run_conversion_suite(std::uint64_t seed, std::uint64_t size_per_schema,
                                      const Budget& b) {
  ConversionReport report;
  const auto& schemas = interp::conversion_pairs();
  for (std::size_t si = 0; si < schemas.size(); ++si) {
    const auto& schema = schemas[si];
    SchemaReport row;
    row.name = schema.name;
    TermGen gen(seed * 1315423911ull + si);
    for (std::uint64_t i = 0; i < size_per_schema; ++i) {
      std::vector<Term> pieces;
      for (const auto& extra : schema.piece_scopes)
        pieces.push_back(gen.gen(extra, 2 + static_cast<int>(gen.next() % 5)));
      interp::ConversionInstance inst = schema.instantiate(pieces);
      interp::ConversionPrograms progs = interp::compile_conversion(inst, b.fuel);
      ++row.instances;
      if (!progs.rhs_defined) {
        // A substituent diverged; the right side is undefined, so agreement
        // means the left side diverges too.
        pca::EvalResult l = pca::run(progs.lhs, b.fuel);
        if (l.converged) ++row.undecided;
        else ++row.agreed_divergent;
        continue;
      }
      switch (compare_programs(progs.lhs, progs.rhs, b.fuel)) {
        case PairOutcome::AgreedValue: ++row.agreed_value; break;
        case PairOutcome::AgreedDivergent: ++row.agreed_divergent; break;
        case PairOutcome::Disagreed: ++row.disagreed; break;
        case PairOutcome::Undecided: ++row.undecided; break;
      }
    }
    report.schemas.push_back(std::move(row));
  }
  return report;
}

Verdict check_substitution(const Term& t, const std::string& x, const Term& a,
                           const Budget& b) {
  pca::Program body = interp::interpret(t, {x});
  pca::Program value = interp::interpret(a);
  pca::Program lhs = pca::substitute_outer(body, value);
  pca::Program rhs = interp::interpret(syntax::substitute(t, x, a));
  switch (compare_programs(lhs, rhs, b.fuel)) {
    case PairOutcome::AgreedValue:
    case PairOutcome::AgreedDivergent:
      return Verdict::yes();
    case PairOutcome::Disagreed:
      return Verdict::no();
    case PairOutcome::Undecided:
      return Verdict::maybe(Why::Fuel);
  }
  return Verdict::maybe(Why::None);
}

SubstReport run_substitution_suite(std::uint64_t seed, std::uint64_t count,
                                   const Budget& b) {
  SubstReport rep;
  TermGen gen(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    Term t = gen.gen({"x"}, 3 + static_cast<int>(gen.next() % 6));
    Term a = gen.gen({}, 2 + static_cast<int>(gen.next() % 4));
    Verdict v = check_substitution(t, "x", a, b);
    ++rep.instances;
    if (v.holds()) ++rep.agreed;
    else if (v.fails()) ++rep.disagreed;
    else ++rep.undecided;
  }
  return rep;
}

Verdict check_coding(const TypeExpr& a, const SemEnv& env, const Budget& b) {
  Term hat_a = syntax::hat(a);
  auto code = realizability::eval_term(hat_a, env, b);
  if (!code) return Verdict::maybe(Why::Fuel);
  auto& eng = setcodes::engine();
  Verdict set_ok = eng.is_set_code(*code, b);
  if (set_ok.fails()) return set_ok;

  Carrier c = realizability::classify_carrier(a, env, b);
  std::vector<Nat> pool;
  if (c.kind == Carrier::Finite) pool = c.elems;
  std::uint64_t raw = std::min<std::uint64_t>(b.enum_bound, kNumericSamples);
  for (std::uint64_t i = 0; i <= raw; ++i) pool.push_back(Nat(i));
  std::sort(pool.begin(), pool.end(), [](const Nat& x, const Nat& y) { return x < y; });
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  // Decided samples only: an Unknown on either side skips the pair.
  Verdict acc = set_ok;
  for (const Nat& t : pool) {
    Verdict sem = realizability::member(t, a, env, b);
    Verdict cod = eng.member(t, *code, b);
    if (sem.decided() && cod.decided() && sem.truth != cod.truth) return Verdict::no();
  }
  for (std::size_t i = 0; i < pool.size() && i < 8; ++i)
    for (std::size_t j = 0; j < pool.size() && j < 8; ++j) {
      Verdict sem = realizability::equiv(pool[i], pool[j], a, env, b);
      Verdict cod = eng.eq(pool[i], pool[j], *code, b);
      if (sem.decided() && cod.decided() && sem.truth != cod.truth) return Verdict::no();
    }
  return acc;
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<CorpusEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string expect;
    if (!(ls >> expect)) continue;
    std::string rest;
    std::getline(ls, rest);
    CorpusEntry e;
    if (expect == "holds") e.expect = Truth::Holds;
    else if (expect == "unknown") e.expect = Truth::Unknown;
    else if (expect == "fails") e.expect = Truth::Fails;
    else throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                  ": bad expectation '" + expect + "'");
    e.text = rest;
    e.j = syntax::parse_judgement(rest);
    e.line = lineno;
    out.push_back(std::move(e));
  }
  return out;
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries, const Budget& b) {
  CorpusReport rep;
  for (const auto& e : entries) {
    Verdict v = check_judgement(e.j, b);
    ++rep.total;
    if (v.unknown()) ++rep.unknowns;
    bool ok = v.truth == e.expect;
    if (ok) ++rep.as_expected;
    if (e.expect != Truth::Fails && v.fails()) {
      ++rep.hard_failures;
      rep.failures.push_back("line " + std::to_string(e.line) + ": " + e.text +
                             " -> " + to_string(v));
    } else if (!ok) {
      rep.failures.push_back("line " + std::to_string(e.line) + ": " + e.text +
                             " -> " + to_string(v) + " (expected " +
                             to_string(e.expect) + ")");
    }
  }
  return rep;
}

}  // namespace mtt::judgements

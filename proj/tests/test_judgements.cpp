#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtt/judgements.hpp"

using namespace mtt;
using namespace mtt::judgements;
using mtt::syntax::parse_judgement;
using mtt::syntax::parse_term;
using mtt::syntax::parse_type;

namespace {
const Budget kB{32, 64, 20000};
}

TEST_CASE("closed judgements from the validity walkthrough") {
  CHECK(check_judgement(parse_judgement("star in N1 []"), kB).holds());
  CHECK(check_judgement(parse_judgement("elN1(star, 0) = 0 in N []"), kB).holds());
  CHECK(check_judgement(parse_judgement("1 in N1 []"), kB).fails());
  CHECK(check_judgement(parse_judgement("0 in N []"), kB).holds());
  CHECK(check_judgement(parse_judgement("N = N set []"), kB).holds());
  CHECK(check_judgement(parse_judgement("lam y. y in Pi (y in N1) N1 []"), kB).holds());
  CHECK(check_judgement(
            parse_judgement("elN(succ(0), 0, (y,z) succ(z)) = succ(0) in N []"), kB)
            .holds());
  CHECK(check_judgement(parse_judgement("Nhat in Set []"), kB).holds());
  CHECK(check_judgement(parse_judgement("tau(bothat) = Bot props []"), kB).holds());
  CHECK(check_judgement(parse_judgement("id(0) in Id(N, 0, 0) []"), kB).holds());
  CHECK(check_judgement(parse_judgement("id(0) in Id(N, 0, succ(0)) []"), kB).fails());
}

TEST_CASE("stratum claims are validated") {
  CHECK(check_judgement(parse_judgement("N1 set []"), kB).holds());
  CHECK(check_judgement(parse_judgement("N1 col []"), kB).holds());
  CHECK(check_judgement(parse_judgement("N props []"), kB).fails());
  CHECK(check_judgement(parse_judgement("Set col []"), kB).holds());
  CHECK(check_judgement(parse_judgement("Set set []"), kB).fails());
}

TEST_CASE("open judgements over finite contexts decide exactly") {
  CHECK(check_judgement(parse_judgement("x in N1 [x in N1]"), kB).holds());
  CHECK(check_judgement(parse_judgement("succ(0) in N [x in N1]"), kB).holds());
  CHECK(check_judgement(parse_judgement("elN1(x, 0) = 0 in N [x in N1]"), kB).holds());
  // vacuous: context over the empty set
  CHECK(check_judgement(parse_judgement("0 = succ(0) in N [h in N0]"), kB).holds());
  CHECK(check_judgement(parse_judgement("0 = succ(0) in N [h in Bot]"), kB).holds());
  // failing instance over an inhabited finite context
  CHECK(check_judgement(parse_judgement("x = star in N1 [x in N1 + N1]"), kB).fails());
  // identity proofs are irrelevant: every sampled pair agrees, but the
  // realizer carrier of a true identity is all of N, so the verdict stays
  // sound rather than complete
  CHECK_FALSE(check_judgement(
                  parse_judgement("h = id(0) in Id(N, 0, 0) [h in Id(N, 0, 0)]"), kB)
                  .fails());
}

TEST_CASE("open judgements over N are sound but sampled") {
  Verdict v = check_judgement(parse_judgement("succ(x) in N [x in N]"), kB);
  CHECK_FALSE(v.fails());
  CHECK(v.unknown());
  CHECK(check_judgement(parse_judgement("succ(x) = 0 in N [x in N]"), kB).fails());
}

TEST_CASE("doteq distinguishes carriers") {
  realizability::SemEnv env;
  CHECK(doteq(parse_type("N"), env, parse_type("N"), env, kB).holds());
  CHECK(doteq(parse_type("N1"), env, parse_type("N0"), env, kB).fails());
  CHECK(doteq(parse_type("N"), env, parse_type("List(N1)"), env, kB).fails());
  CHECK(doteq(parse_type("N1 + N1"), env, parse_type("N1 + N1"), env, kB).holds());
  // decoding equalities hold by evaluation
  CHECK(doteq(parse_type("tau(N1hat)"), env, parse_type("N1"), env, kB).holds());
  CHECK(doteq(parse_type("tau(bothat)"), env, parse_type("Bot"), env, kB).holds());
}

TEST_CASE("decoding judgements") {
  CHECK(check_judgement(parse_judgement("tau(N1hat) = N1 set []"), kB).holds());
  CHECK(check_judgement(
            parse_judgement("tau(orhat(bothat, bothat)) = Bot \\/ Bot props []"), kB)
            .holds());
  CHECK(check_judgement(parse_judgement("tau(N1hat) = N set []"), kB).fails());
}

TEST_CASE("conversion suite has no decided disagreements") {
  ConversionReport rep = run_conversion_suite(7, 60, kB);
  CHECK(rep.schemas.size() == 17);
  CHECK(rep.total() == 17 * 60);
  CHECK(rep.disagreements() == 0);
  CHECK(rep.undecided() * 20 < rep.total());  // well under 5%
}

TEST_CASE("substitution commutation is exact on generated triples") {
  SubstReport rep = run_substitution_suite(3, 200, kB);
  CHECK(rep.instances == 200);
  CHECK(rep.disagreed == 0);
  CHECK(rep.agreed == 200);
}

TEST_CASE("coding condition on the corpus sets") {
  realizability::SemEnv env;
  const char* sets[] = {"N",
                        "N0",
                        "N1",
                        "N1 + N1",
                        "List(N1)",
                        "List(N0)",
                        "Pi (x in N1) N1",
                        "Sig (x in N1) N1",
                        "Bot",
                        "Id(N, 0, 0)"};
  for (const char* s : sets) {
    Verdict v = check_coding(parse_type(s), env, kB);
    INFO(s);
    CHECK(v.holds());
  }
}

TEST_CASE("interpret_judgement renders the interpreting formula") {
  SemFormula f = interpret_judgement(parse_judgement("star in N1 []"));
  CHECK(f.rendered.find("eps J(N1)") != std::string::npos);
  SemFormula g = interpret_judgement(parse_judgement("succ(x) in N [x in N]"));
  CHECK(g.rendered.find("quantified over context") != std::string::npos);
}

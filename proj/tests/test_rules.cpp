#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mtt/rules.hpp"

using namespace mtt;
using namespace mtt::rules;

namespace {
bool ok(const char* text) {
  DerivationNode d = parse_derivation(text);
  auto err = check_derivation(d);
  if (err) { INFO(err->to_string()); return false; }
  return true;
}

std::string error_of(const char* text) {
  auto err = check_derivation(parse_derivation(text));
  return err ? err->to_string() : "";
}
}  // namespace

TEST_CASE("leaf rules accept their axioms in any context") {
  CHECK(ok("(F-Em \"N0 set []\")"));
  CHECK(ok("(F-Em \"N0 set [x in N]\")"));
  CHECK(ok("(I-S \"star in N1 []\")"));
  CHECK(ok("(S \"N1 set []\")"));
  CHECK(ok("(F-N \"N set []\")"));
  CHECK(ok("(I1-N \"0 in N []\")"));
  CHECK(ok("(Se_e \"N0hat in Set []\")"));
  CHECK(ok("(Pr1 \"bothat in props []\")"));
  CHECK(ok("(eq-Pr1 \"tau(bothat) = Bot props []\")"));
  // wrong heads are rejected
  CHECK_FALSE(ok("(F-Em \"N1 set []\")"));
  CHECK_FALSE(ok("(I-S \"star in N []\")"));
}

TEST_CASE("contexts and variable assumption") {
  CHECK(ok("(c-empty \"cont []\")"));
  CHECK(ok("(F-c \"cont [x in N]\" (F-N \"N set []\"))"));
  CHECK(ok("(var \"x in N [x in N]\" (F-c \"cont [x in N]\" (F-N \"N set []\")))"));
  // the declared type must match
  CHECK_FALSE(ok("(var \"x in N1 [x in N]\" (F-c \"cont [x in N]\" (F-N \"N set []\")))"));
  // duplicate variables never parse in the first place
  CHECK_THROWS(parse_derivation("(F-c \"cont [x in N, x in N]\" (F-N \"N set [x in N]\"))"));
}

TEST_CASE("successor introduction") {
  CHECK(ok("(I2-N \"succ(0) in N []\" (I1-N \"0 in N []\"))"));
  CHECK_FALSE(ok("(I2-N \"succ(0) in N1 []\" (I1-N \"0 in N []\"))"));
}

TEST_CASE("singleton conversion requires the exact substituted motive") {
  const char* good =
      "(C-S \"elN1(star, 0) = 0 in N []\""
      "  (set-into-col \"N col [z in N1]\" (F-N \"N set [z in N1]\"))"
      "  (I1-N \"0 in N []\"))";
  CHECK(ok(good));
  // mis-instantiated conversion target
  const char* bad =
      "(C-S \"elN1(star, 0) = succ(0) in N []\""
      "  (set-into-col \"N col [z in N1]\" (F-N \"N set [z in N1]\"))"
      "  (I1-N \"0 in N []\"))";
  CHECK_FALSE(ok(bad));
}

TEST_CASE("dependent product rules") {
  const char* intro =
      "(I-Pi \"lam x. x in Pi (x in N1) N1 []\""
      "  (var \"x in N1 [x in N1]\" (F-c \"cont [x in N1]\" (S \"N1 set []\")))"
      "  (S \"N1 set [x in N1]\")"
      "  (S \"N1 set []\"))";
  CHECK(ok(intro));
  const char* beta =
      "(bC-Pi \"ap(lam x. x, star) = star in N1 []\""
      "  (I-S \"star in N1 []\")"
      "  (var \"x in N1 [x in N1]\" (F-c \"cont [x in N1]\" (S \"N1 set []\")))"
      "  (S \"N1 set [x in N1]\")"
      "  (S \"N1 set []\"))";
  CHECK(ok(beta));
}

TEST_CASE("the recursor rules of N") {
  const char* elim =
      "(E-N \"elN(succ(0), 0, (y,z) succ(z)) in N []\""
      "  (set-into-col \"N col [u in N]\" (F-N \"N set [u in N]\"))"
      "  (I2-N \"succ(0) in N []\" (I1-N \"0 in N []\"))"
      "  (I1-N \"0 in N []\")"
      "  (I2-N \"succ(z) in N [y in N, z in N]\""
      "    (var \"z in N [y in N, z in N]\""
      "      (F-c \"cont [y in N, z in N]\" (F-N \"N set [y in N]\")))))";
  CHECK(ok(elim));
  const char* conv =
      "(C2-N \"elN(succ(0), 0, (y,z) succ(z)) = succ(elN(0, 0, (y,z) succ(z))) in N []\""
      "  (set-into-col \"N col [u in N]\" (F-N \"N set [u in N]\"))"
      "  (I1-N \"0 in N []\")"
      "  (I1-N \"0 in N []\")"
      "  (I2-N \"succ(z) in N [y in N, z in N]\""
      "    (var \"z in N [y in N, z in N]\""
      "      (F-c \"cont [y in N, z in N]\" (F-N \"N set [y in N]\")))))";
  CHECK(ok(conv));
}

TEST_CASE("substitution rules in plain and typed presentation") {
  const char* plain =
      "(sub \"succ(0) = succ(succ(0)) in N []\""
      "  (I2-N \"succ(x) in N [x in N]\""
      "    (var \"x in N [x in N]\" (F-c \"cont [x in N]\" (F-N \"N set []\"))))"
      "  (ref-tm \"0 = 0 in N []\" (I1-N \"0 in N []\")))";
  // conclusion must be succ(0) = succ(0); the mismatch is rejected
  CHECK_FALSE(ok(plain));
  const char* fixed =
      "(sub \"succ(0) = succ(0) in N []\""
      "  (I2-N \"succ(x) in N [x in N]\""
      "    (var \"x in N [x in N]\" (F-c \"cont [x in N]\" (F-N \"N set []\"))))"
      "  (ref-tm \"0 = 0 in N []\" (I1-N \"0 in N []\")))";
  CHECK(ok(fixed));
  const char* typed =
      "(sub_m \"succ(0) = succ(0) in N []\""
      "  (I2-N \"succ(x) in N [x in N]\""
      "    (var \"x in N [x in N]\" (F-c \"cont [x in N]\" (F-N \"N set []\"))))"
      "  (F-N \"N set [x in N]\")"
      "  (I1-N \"0 in N []\")"
      "  (I1-N \"0 in N []\")"
      "  (ref-tm \"0 = 0 in N []\" (I1-N \"0 in N []\")))";
  CHECK(ok(typed));
}

TEST_CASE("prop_s code rules") {
  CHECK(ok("(Pr2 \"orhat(bothat, bothat) in props []\""
           "  (Pr1 \"bothat in props []\") (Pr1 \"bothat in props []\"))"));
  CHECK(ok("(Pr7 \"Idhat(N, 0, 0) in props []\""
           "  (F-N \"N set []\") (I1-N \"0 in N []\") (I1-N \"0 in N []\"))"));
  CHECK(ok("(T-Pr \"tau(bothat) props []\" (Pr1 \"bothat in props []\"))"));
  CHECK(ok("(eq-Pr2 \"tau(orhat(bothat, bothat)) = tau(bothat) \\/ tau(bothat) props []\""
           "  (Pr1 \"bothat in props []\") (Pr1 \"bothat in props []\"))"));
  CHECK(ok("(sp-i-p \"bothat in Set []\" (Pr1 \"bothat in props []\"))"));
  CHECK(ok("(Se_Pi \"Pihat (x in N1) N1hat in Set []\""
           "  (Se_s \"N1hat in Set [x in N1]\") (S \"N1 set []\"))"));
}

TEST_CASE("the xi rule is absent and Set has no eliminator") {
  for (const auto& r : rule_table()) {
    CHECK(r.name != "xi");
    CHECK(r.name != "E-Se");
    CHECK(r.name != "C-Se");
  }
  // a xi-shaped inference is rejected as an unknown rule
  auto err = error_of(
      "(xi \"lam x. 0 = lam x. elN1(star, 0) in Pi (x in N1) N []\""
      "  (C-S \"elN1(star, 0) = 0 in N [x in N1]\""
      "    (set-into-col \"N col [x in N1, z in N1]\" (F-N \"N set [x in N1, z in N1]\"))"
      "    (I1-N \"0 in N [x in N1]\")))");
  CHECK(err.find("unknown rule") != std::string::npos);
  // a fabricated elimination for the universe of sets is rejected too
  auto err2 = error_of("(E-Se \"Nhat in Set []\" (F-Se \"Set col []\"))");
  CHECK(err2.find("unknown rule") != std::string::npos);
}

TEST_CASE("the rule table carries every displayed schema exactly once") {
  std::set<std::string> names;
  for (const auto& r : rule_table()) {
    CHECK(names.insert(r.name).second);  // exactly once
  }
  for (const char* required :
       {"var", "F-c", "set-into-col", "prop-into-col", "props-into-prop",
        "props-into-set", "ref-ty", "sym-ty", "tra-ty", "subT", "subT_m", "ref-tm",
        "sym-tm", "tra-tm", "sub", "sub_m", "conv", "conv-eq", "F-Sig-col", "I-Sig",
        "E-Sig", "C-Sig", "F-Em", "E-Em", "S", "I-S", "E-S", "C-S", "F-N", "I1-N",
        "I2-N", "E-N", "C1-N", "C2-N", "F-list", "I1-list", "I2-list", "E-list",
        "C1-list", "C2-list", "F-plus", "I1-plus", "I2-plus", "E-plus", "C1-plus",
        "C2-plus", "F-Pi", "I-Pi", "E-Pi", "E-Pi_m", "bC-Pi", "F-Sig-set", "F-Fs",
        "E-Fs", "F-or", "I1-or", "I2-or", "E-or", "C1-or", "C2-or", "F-and", "I-and",
        "E1-and", "E2-and", "b1C-and", "b2C-and", "F-imp", "I-imp", "E-imp", "bC-imp",
        "F-ex", "F-ex_m", "I-ex", "E-ex", "C-ex", "F-all", "F-all_m", "I-all", "E-all",
        "E-all_m", "bC-all", "F-Id", "I-Id", "E-Id", "C-Id", "eq-Id", "F-Pr", "T-Pr",
        "Pr1", "Pr2", "Pr3", "Pr4", "Pr5", "Pr6", "Pr7", "eq-Pr1", "eq-Pr2", "eq-Pr3",
        "eq-Pr4", "eq-Pr5", "eq-Pr6", "eq-Pr7", "F-Se", "Se_e", "Se_s", "Se_n", "Se_l",
        "Se_u", "Se_Sig", "Se_Pi", "sp-i-p", "F-Fun", "I-Fun", "E-Fun", "bC-Fun",
        "eq-Sig-col", "eq-Pi-col", "eq-Sig-set", "eq-Pi-set", "eq-list", "eq-plus",
        "eq-or", "eq-and", "eq-imp", "eq-ex", "eq-all", "prop-into-col-eq",
        "props-into-prop-eq", "props-into-set-eq", "props-eq1", "props-eq2",
        "c-empty"}) {
    INFO(required);
    CHECK(names.count(required) == 1);
  }
}

TEST_CASE("error paths point into the tree") {
  auto err = error_of(
      "(I2-N \"succ(succ(0)) in N []\""
      "  (I2-N \"succ(0) in N1 []\" (I1-N \"0 in N []\")))");
  CHECK(err.find("at 0") != std::string::npos);
}

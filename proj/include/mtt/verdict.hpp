#pragma once

#include <cstdint>
#include <string>

namespace mtt {

// Three-valued bounded answer for semi-decidable semantic queries.
// Holds and Fails are definitive: a larger budget never flips one to the
// other. Unknown records which resource ran out first.

enum class Truth { Holds, Fails, Unknown };

enum class Why { None, Fuel, EnumBound, Depth, NonEnumerable };

struct Budget {
  std::uint32_t depth = 32;
  std::uint64_t enum_bound = 64;
  std::uint64_t fuel = 100000;

  Budget shallower() const {
    Budget b = *this;
    if (b.depth > 0) --b.depth;
    return b;
  }
};

struct Verdict {
  Truth truth = Truth::Unknown;
  Why why = Why::None;
  std::uint64_t work = 0;  // atoms and fix-point unfoldings charged

  bool holds() const { return truth == Truth::Holds; }
  bool fails() const { return truth == Truth::Fails; }
  bool unknown() const { return truth == Truth::Unknown; }
  bool decided() const { return truth != Truth::Unknown; }

  static Verdict yes(std::uint64_t work = 1) { return {Truth::Holds, Why::None, work}; }
  static Verdict no(std::uint64_t work = 1) { return {Truth::Fails, Why::None, work}; }
  static Verdict maybe(Why w, std::uint64_t work = 1) { return {Truth::Unknown, w, work}; }
};

Verdict v_and(const Verdict& a, const Verdict& b);
Verdict v_or(const Verdict& a, const Verdict& b);
// Classical negation of a decided verdict; Unknown stays Unknown.
Verdict v_not(const Verdict& a);
// Biconditional: decided on both sides only.
Verdict v_iff(const Verdict& a, const Verdict& b);

std::string to_string(Truth t);
std::string to_string(Why w);
std::string to_string(const Verdict& v);

}  // namespace mtt

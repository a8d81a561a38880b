#include "mtt/verdict.hpp"

namespace mtt {

namespace {
Why pick_why(const Verdict& a, const Verdict& b) {
  if (a.unknown()) return a.why;
  return b.why;
}
}  // namespace

Verdict v_and(const Verdict& a, const Verdict& b) {
  std::uint64_t w = a.work + b.work;
  if (a.fails() || b.fails()) return {Truth::Fails, Why::None, w};
  if (a.holds() && b.holds()) return {Truth::Holds, Why::None, w};
  return {Truth::Unknown, pick_why(a, b), w};
}

Verdict v_or(const Verdict& a, const Verdict& b) {
  std::uint64_t w = a.work + b.work;
  if (a.holds() || b.holds()) return {Truth::Holds, Why::None, w};
  if (a.fails() && b.fails()) return {Truth::Fails, Why::None, w};
  return {Truth::Unknown, pick_why(a, b), w};
}

Verdict v_not(const Verdict& a) {
  if (a.holds()) return {Truth::Fails, Why::None, a.work};
  if (a.fails()) return {Truth::Holds, Why::None, a.work};
  return a;
}

Verdict v_iff(const Verdict& a, const Verdict& b) {
  std::uint64_t w = a.work + b.work;
  if (a.decided() && b.decided())
    return {a.truth == b.truth ? Truth::Holds : Truth::Fails, Why::None, w};
  return {Truth::Unknown, pick_why(a, b), w};
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::Holds: return "holds";
    case Truth::Fails: return "fails";
    case Truth::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Why w) {
  switch (w) {
    case Why::None: return "none";
    case Why::Fuel: return "fuel";
    case Why::EnumBound: return "enum-bound";
    case Why::Depth: return "depth";
    case Why::NonEnumerable: return "non-enumerable-domain";
  }
  return "?";
}

std::string to_string(const Verdict& v) {
  std::string s = to_string(v.truth);
  if (v.unknown() && v.why != Why::None) s += "(" + to_string(v.why) + ")";
  return s;
}

}  // namespace mtt

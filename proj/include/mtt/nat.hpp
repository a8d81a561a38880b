#pragma once

#include <cstdint>
#include <compare>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

namespace mtt {

// Unsigned arbitrary-precision integer, little-endian 32-bit limbs.
// Just enough arithmetic for Goedel codes: the Cantor pairing of program
// codes overflows 64 bits after a handful of nestings.
class Nat {
public:
  Nat() = default;
  Nat(std::uint64_t v);

  static Nat from_string(std::string_view decimal);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t as_u64() const;  // requires fits_u64()

  std::string to_string() const;

  Nat& operator+=(const Nat& o);
  Nat& operator-=(const Nat& o);  // requires *this >= o
  Nat& operator++();

  friend Nat operator+(Nat a, const Nat& b) { a += b; return a; }
  friend Nat operator-(Nat a, const Nat& b) { a -= b; return a; }
  friend Nat operator*(const Nat& a, const Nat& b);

  // Quotient and remainder by a small divisor.
  std::pair<Nat, std::uint32_t> divmod(std::uint32_t d) const;

  // Full division (Knuth algorithm D) and integer square root (Newton).
  static std::pair<Nat, Nat> divmod(const Nat& num, const Nat& den);
  static Nat isqrt(const Nat& v);

  Nat half() const;
  Nat shifted_left(unsigned bits) const;

  std::strong_ordering operator<=>(const Nat& o) const;
  bool operator==(const Nat& o) const { return limbs_ == o.limbs_; }

  std::size_t hash() const;
  std::size_t bit_length() const;

private:
  std::vector<std::uint32_t> limbs_;
  void trim();
};

struct NatHash {
  std::size_t operator()(const Nat& n) const { return n.hash(); }
};

}  // namespace mtt

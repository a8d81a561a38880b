#include "mtt/nat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mtt {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

Nat::Nat(std::uint64_t v) {
  if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void Nat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t Nat::as_u64() const {
  std::uint64_t v = 0;
  if (limbs_.size() > 2) throw std::overflow_error("Nat::as_u64: value too large");
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

Nat& Nat::operator+=(const Nat& o) {
  std::uint64_t carry = 0;
  std::size_t n = std::max(limbs_.size(), o.limbs_.size());
  limbs_.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

Nat& Nat::operator-=(const Nat& o) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < o.limbs_.size() ? o.limbs_[i] : 0);
    if (d < 0) { d += kBase; borrow = 1; } else { borrow = 0; }
    limbs_[i] = static_cast<std::uint32_t>(d);
  }
  if (borrow) throw std::underflow_error("Nat: subtraction underflow");
  trim();
  return *this;
}

Nat& Nat::operator++() {
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (++limbs_[i] != 0) return *this;
  }
  limbs_.push_back(1);
  return *this;
}

Nat operator*(const Nat& a, const Nat& b) {
  if (a.is_zero() || b.is_zero()) return Nat();
  Nat r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  r.trim();
  return r;
}

std::pair<Nat, std::uint32_t> Nat::divmod(std::uint32_t d) const {
  if (d == 0) throw std::domain_error("Nat: division by zero");
  Nat quot;
  quot.limbs_.assign(limbs_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    quot.limbs_[i] = static_cast<std::uint32_t>(cur / d);
    rem = cur % d;
  }
  quot.trim();
  return {std::move(quot), static_cast<std::uint32_t>(rem)};
}

Nat Nat::shifted_left(unsigned bits) const {
  if (is_zero() || bits == 0) return *this;
  Nat r;
  unsigned limb_shift = bits / 32, bit_shift = bits % 32;
  r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
    r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v);
    r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  r.trim();
  return r;
}

std::pair<Nat, Nat> Nat::divmod(const Nat& num, const Nat& den) {
  if (den.is_zero()) throw std::domain_error("Nat: division by zero");
  if (num < den) return {Nat(), num};
  if (den.limbs_.size() == 1) {
    auto [q, r] = num.divmod(den.limbs_[0]);
    return {std::move(q), Nat(r)};
  }
  // Normalize so the top divisor limb has its high bit set.
  unsigned shift = 0;
  for (std::uint32_t top = den.limbs_.back(); !(top & 0x80000000u); top <<= 1) ++shift;
  Nat u = num.shifted_left(shift);
  Nat v = den.shifted_left(shift);
  std::size_t n = v.limbs_.size(), m = u.limbs_.size() - n;
  u.limbs_.push_back(0);
  Nat quot;
  quot.limbs_.assign(m + 1, 0);
  const std::uint64_t base = 1ull << 32;
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t top2 = (static_cast<std::uint64_t>(u.limbs_[j + n]) << 32) |
                         u.limbs_[j + n - 1];
    std::uint64_t qhat = top2 / v.limbs_.back();
    std::uint64_t rhat = top2 % v.limbs_.back();
    while (qhat >= base ||
           qhat * v.limbs_[n - 2] > ((rhat << 32) | u.limbs_[j + n - 2])) {
      --qhat;
      rhat += v.limbs_.back();
      if (rhat >= base) break;
    }
    // Multiply-subtract qhat * v from u[j..j+n].
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t prod = qhat * v.limbs_[i] + carry;
      carry = prod >> 32;
      std::int64_t d = static_cast<std::int64_t>(u.limbs_[i + j]) - borrow -
                       static_cast<std::int64_t>(prod & 0xffffffffu);
      if (d < 0) { d += static_cast<std::int64_t>(base); borrow = 1; } else borrow = 0;
      u.limbs_[i + j] = static_cast<std::uint32_t>(d);
    }
    std::int64_t d = static_cast<std::int64_t>(u.limbs_[j + n]) - borrow -
                     static_cast<std::int64_t>(carry);
    if (d < 0) {
      // qhat was one too large: add v back.
      d += static_cast<std::int64_t>(base);
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = c2 + u.limbs_[i + j] + v.limbs_[i];
        u.limbs_[i + j] = static_cast<std::uint32_t>(s);
        c2 = s >> 32;
      }
      d += static_cast<std::int64_t>(c2);
    }
    u.limbs_[j + n] = static_cast<std::uint32_t>(d);
    quot.limbs_[j] = static_cast<std::uint32_t>(qhat);
  }
  quot.trim();
  u.limbs_.resize(n);
  u.trim();
  // Undo normalization of the remainder.
  if (shift) {
    Nat rem;
    rem.limbs_.assign(u.limbs_.size(), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = u.limbs_.size(); i-- > 0;) {
      rem.limbs_[i] = (u.limbs_[i] >> shift) | carry;
      carry = shift ? (u.limbs_[i] << (32 - shift)) : 0;
    }
    rem.trim();
    return {std::move(quot), std::move(rem)};
  }
  return {std::move(quot), std::move(u)};
}

Nat Nat::isqrt(const Nat& v) {
  if (v.is_zero()) return Nat();
  if (v.fits_u64()) {
    std::uint64_t n = v.as_u64();
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
    return Nat(r);
  }
  Nat x = Nat(1).shifted_left(static_cast<unsigned>((v.bit_length() + 1) / 2));
  while (true) {
    Nat y = (x + divmod(v, x).first).half();
    if (!(y < x)) break;
    x = std::move(y);
  }
  return x;
}

Nat Nat::half() const {
  Nat r;
  r.limbs_.assign(limbs_.size(), 0);
  std::uint32_t carry = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    r.limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
    carry = limbs_[i] & 1;
  }
  r.trim();
  return r;
}

std::strong_ordering Nat::operator<=>(const Nat& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() <=> o.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::string Nat::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  Nat cur = *this;
  while (!cur.is_zero()) {
    auto [q, r] = cur.divmod(1000000000u);
    std::string chunk = std::to_string(r);
    if (!q.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
    out.insert(0, chunk);
    cur = std::move(q);
  }
  return out;
}

Nat Nat::from_string(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("Nat: empty numeral");
  Nat r;
  for (char c : decimal) {
    if (c < '0' || c > '9') throw std::invalid_argument("Nat: bad digit in numeral");
    r = r * Nat(10);
    r += Nat(static_cast<std::uint64_t>(c - '0'));
  }
  return r;
}

std::size_t Nat::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint32_t l : limbs_) h = (h ^ l) * 0x100000001b3ull;
  return h;
}

std::size_t Nat::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) { ++bits; top >>= 1; }
  return bits;
}

}  // namespace mtt

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>

#include "reescm/ring.hpp"

namespace reescm {

enum class TermOrder {
  BlockLex,     // z > x > y, lex inside each block
  Elimination,  // t above everything, block-lex below t
};

std::string to_string(TermOrder ord);

// Dense exponent vector over a Ring's enumeration. Slot 0 is the largest
// variable, so both supported term orders are plain lex on the slots.
class Monomial {
 public:
  static constexpr std::size_t kSlots = Ring::kMaxVariables;
  using Exponent = std::uint8_t;

  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  unsigned exponent(std::size_t index) const { return exps_[index]; }
  void set(std::size_t index, unsigned power);

  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  bool is_square_free() const;
  // Bit i set iff variable i occurs.
  std::uint64_t support() const { return support_; }

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::uint64_t s = support_; s != 0; s &= s - 1) {
      auto i = static_cast<std::size_t>(std::countr_zero(s));
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  bool operator==(const Monomial& other) const {
    return support_ == other.support_ && exps_ == other.exps_;
  }
  // Lex with slot 0 most significant.
  std::strong_ordering operator<=>(const Monomial& other) const {
    int c = std::memcmp(exps_.data(), other.exps_.data(), kSlots);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

  std::string to_string(const Ring& ring) const;

 private:
  std::array<Exponent, kSlots> exps_;
  std::uint64_t support_ = 0;
  std::uint32_t degree_ = 0;
};

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                              TermOrder /*ord*/) {
  // Both orders coincide on the shared enumeration (t is slot 0 when present).
  return a <=> b;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace reescm

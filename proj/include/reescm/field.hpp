#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace reescm {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in coefficient field") {}
};

// Exact rational numbers backed by GMP.
class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw DivisionByZero();
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string format(const Element& a) const { return a.get_str(); }
  Element parse(const std::string& text) const {
    Element v(text);
    v.canonicalize();
    return v;
  }

  std::string name() const { return "QQ"; }
  bool operator==(const Rationals&) const { return true; }
};

// Z/pZ for a prime p < 2^31. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element from_rational(const mpq_class& q) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  // Representatives above p/2 print as negatives so that small integer
  // coefficients read the same in every characteristic.
  bool is_negative(Element a) const { return a > p_ / 2; }
  bool equal(Element a, Element b) const { return a == b; }

  std::string format(Element a) const;
  Element parse(const std::string& text) const;

  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace reescm

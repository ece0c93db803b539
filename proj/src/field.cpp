#include "reescm/field.hpp"

#include "reescm/polynomial.hpp"

namespace reescm {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) throw DivisionByZero();
  return div(static_cast<Element>(num.get_ui()), static_cast<Element>(den.get_ui()));
}

std::string PrimeField::format(Element a) const {
  if (is_negative(a)) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

PrimeField::Element PrimeField::parse(const std::string& text) const {
  return from_rational(mpq_class(text));
}

Polynomial<PrimeField> reduce_mod(const Polynomial<Rationals>& f, const PrimeField& field) {
  std::vector<Term<PrimeField>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({field.from_rational(t.coeff), t.mono});
  return Polynomial<PrimeField>::from_terms(f.ring(), field, std::move(terms));
}

}  // namespace reescm

#include "reescm/monomial.hpp"

namespace reescm {

std::string to_string(TermOrder ord) {
  switch (ord) {
    case TermOrder::BlockLex:
      return "block-lex";
    case TermOrder::Elimination:
      return "elimination";
  }
  return "?";
}

void Monomial::set(std::size_t index, unsigned power) {
  if (index >= kSlots) throw std::out_of_range("monomial slot out of range");
  if (power > 255) throw std::overflow_error("monomial exponent exceeds 255");
  degree_ = degree_ - exps_[index] + power;
  exps_[index] = static_cast<Exponent>(power);
  if (power == 0)
    support_ &= ~(std::uint64_t{1} << index);
  else
    support_ |= std::uint64_t{1} << index;
}

bool Monomial::is_square_free() const {
  for (std::uint64_t s = support_; s != 0; s &= s - 1)
    if (exps_[static_cast<std::size_t>(std::countr_zero(s))] != 1) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::uint64_t s = other.support_; s != 0; s &= s - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(s));
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.support_ |= other.support_;
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::uint64_t s = divisor.support_; s != 0; s &= s - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(s));
    r.exps_[i] = static_cast<Exponent>(exps_[i] - divisor.exps_[i]);
    if (r.exps_[i] == 0) r.support_ &= ~(std::uint64_t{1} << i);
  }
  r.degree_ -= divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  for (std::uint64_t s = other.support_; s != 0; s &= s - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(s));
    if (other.exps_[i] > r.exps_[i]) {
      r.degree_ += other.exps_[i] - r.exps_[i];
      r.exps_[i] = other.exps_[i];
    }
  }
  r.support_ |= other.support_;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::uint64_t s = support_ & other.support_; s != 0; s &= s - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(s));
    r.set(i, std::min(exps_[i], other.exps_[i]));
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = support_ * 0x9E3779B97F4A7C15ull;
  for (std::uint64_t s = support_; s != 0; s &= s - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(s));
    h = (h ^ (exps_[i] + 0x9E3779B9u + (h << 6) + (h >> 2))) + i;
  }
  return h;
}

std::string Monomial::to_string(const Ring& ring) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::uint64_t s = support_; s != 0; s &= s - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(s));
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

}  // namespace reescm

#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reescm/field.hpp"
#include "reescm/monomial.hpp"
#include "reescm/ring.hpp"

namespace reescm {

class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("polynomials live in different rings or fields") {}
};

template <class K>
struct Term {
  typename K::Element coeff;
  Monomial mono;
};

// Sparse polynomial in canonical form: terms strictly decreasing in the term
// order, no zero coefficients. The zero polynomial has no terms.
template <class K>
class Polynomial {
 public:
  using Field = K;
  using Element = typename K::Element;
  using TermType = Term<K>;

  Polynomial(RingPtr ring, K field = K{}) : ring_(std::move(ring)), field_(std::move(field)) {}

  static Polynomial constant(RingPtr ring, K field, const Element& c) {
    Polynomial p(std::move(ring), std::move(field));
    if (!p.field_.is_zero(c)) p.terms_.push_back({c, Monomial{}});
    return p;
  }
  static Polynomial variable(RingPtr ring, K field, const Variable& v) {
    Polynomial p(std::move(ring), std::move(field));
    p.terms_.push_back({p.field_.one(), Monomial::variable(p.ring_->index_of(v))});
    return p;
  }
  static Polynomial monomial(RingPtr ring, K field, const Monomial& m) {
    Polynomial p(std::move(ring), std::move(field));
    p.terms_.push_back({p.field_.one(), m});
    return p;
  }
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, K field, std::vector<TermType> terms) {
    Polynomial p(std::move(ring), std::move(field));
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const K& field() const { return field_; }
  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const TermType& leading() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return leading().mono; }
  const Element& lead_coeff() const { return leading().coeff; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool uses_variable(std::size_t index) const {
    const std::uint64_t bit = std::uint64_t{1} << index;
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const TermType& t) { return (t.mono.support() & bit) != 0; });
  }

  bool compatible(const Polynomial& o) const {
    return field_ == o.field_ &&
           (ring_ == o.ring_ || (ring_->rows() == o.ring_->rows() &&
                                 ring_->cols() == o.ring_->cols() &&
                                 ring_->has_aux() == o.ring_->has_aux()));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }
  Polynomial operator+(const Polynomial& o) const { return combine(o, field_.one()); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, field_.neg(field_.one())); }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Element& c) const {
    if (field_.is_zero(c)) return Polynomial(ring_, field_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
    return r;
  }
  Polynomial shifted(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }
  // this + c * m * o, the kernel of reduction.
  Polynomial add_multiple(const Element& c, const Monomial& m, const Polynomial& o) const;

  // Leading coefficient 1 (zero stays zero).
  Polynomial monic() const {
    if (is_zero() || field_.is_one(lead_coeff())) return *this;
    return scaled(field_.inv(lead_coeff()));
  }

  // Applies a ring map sending each variable slot either to another slot or,
  // when the map yields nullopt, to zero.
  Polynomial rename(const std::function<std::optional<std::size_t>(std::size_t)>& slot_map) const;

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || !field_.equal(terms_[i].coeff, o.terms_[i].coeff))
        return false;
    return true;
  }

  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& o) const {
    if (!compatible(o)) throw FieldMismatch();
  }
  Polynomial combine(const Polynomial& o, const Element& sign) const {
    require_compatible(o);
    return add_multiple(sign, Monomial{}, o);
  }
  void canonicalize();

  RingPtr ring_;
  K field_;
  std::vector<TermType> terms_;
};

template <class K>
void Polynomial<K>::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const TermType& a, const TermType& b) { return a.mono > b.mono; });
  std::vector<TermType> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
  terms_ = std::move(out);
}

template <class K>
Polynomial<K> Polynomial<K>::add_multiple(const Element& c, const Monomial& m,
                                          const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(ring_, field_);
  if (field_.is_zero(c)) return *this;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const bool shift = !m.is_one();
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial om = shift ? o.terms_[j].mono * m : o.terms_[j].mono;
    if (i == terms_.size()) {
      r.terms_.push_back({field_.mul(c, o.terms_[j].coeff), om});
      ++j;
      continue;
    }
    auto cmp = terms_[i].mono <=> om;
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({field_.mul(c, o.terms_[j].coeff), om});
      ++j;
    } else {
      Element s = field_.add(terms_[i].coeff, field_.mul(c, o.terms_[j].coeff));
      if (!field_.is_zero(s)) r.terms_.push_back({std::move(s), om});
      ++i;
      ++j;
    }
  }
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::operator*(const Polynomial& o) const {
  require_compatible(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_, field_);
  std::vector<TermType> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prods.push_back({field_.mul(a.coeff, b.coeff), a.mono * b.mono});
  return from_terms(ring_, field_, std::move(prods));
}

template <class K>
Polynomial<K> Polynomial<K>::rename(
    const std::function<std::optional<std::size_t>(std::size_t)>& slot_map) const {
  std::vector<TermType> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    bool vanished = false;
    for (std::uint64_t s = t.mono.support(); s != 0; s &= s - 1) {
      auto i = static_cast<std::size_t>(std::countr_zero(s));
      auto target = slot_map(i);
      if (!target) {
        vanished = true;
        break;
      }
      m = m * Monomial::variable(*target, t.mono.exponent(i));
    }
    if (!vanished) out.push_back({t.coeff, m});
  }
  return from_terms(ring_, field_, std::move(out));
}

// Text form: terms in decreasing order joined by " + " / " - ", a coefficient
// written only when it is not 1, factors joined by '*', e.g.
// "z[1,1]*x[1,2] - z[1,1]*y[1,2] - 2*x[1,1]^2 + 1".
template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = field_.is_negative(t.coeff);
    Element magnitude = negative ? field_.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += field_.format(magnitude);
    } else {
      if (!field_.is_one(magnitude)) out += field_.format(magnitude) + "*";
      out += t.mono.to_string(*ring_);
    }
  }
  return out;
}

// Parses the text form written by to_string (whitespace-insensitive);
// parenthesized sub-expressions and powers of them are accepted too.
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr& ring, const K& field = K{}) {
  using P = Polynomial<K>;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  auto exponent = [&]() -> unsigned {
    if (pos >= s.size() || s[pos] != '^') return 1;
    std::size_t e = ++pos;
    while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
    if (e == pos) fail("missing exponent");
    auto k = static_cast<unsigned>(std::stoul(s.substr(pos, e - pos)));
    pos = e;
    return k;
  };
  std::function<P()> expr;
  auto factor = [&]() -> P {
    if (pos >= s.size()) fail("empty term");
    if (s[pos] == '(') {
      ++pos;
      P inner = expr();
      if (pos >= s.size() || s[pos] != ')') fail("missing )");
      ++pos;
      P out = P::constant(ring, field, field.one());
      for (unsigned k = exponent(); k > 0; --k) out *= inner;
      return out;
    }
    std::size_t end = pos;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
      auto c = field.parse(s.substr(pos, end - pos));
      pos = end;
      return P::constant(ring, field, c);
    }
    if (s[pos] == 't') {
      end = pos + 1;
    } else {
      end = s.find(']', pos);
      if (end == std::string::npos) fail("unterminated variable");
      ++end;
    }
    auto var = parse_variable(std::string_view(s).substr(pos, end - pos));
    if (!var) fail("bad variable '" + s.substr(pos, end - pos) + "'");
    pos = end;
    const unsigned power = exponent();
    return P::monomial(ring, field, Monomial::variable(ring->index_of(*var), power));
  };
  auto term = [&]() -> P {
    P out = factor();
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      out *= factor();
    }
    return out;
  };
  expr = [&]() -> P {
    P out(ring, field);
    bool first = true;
    while (pos < s.size() && s[pos] != ')') {
      bool negative = false;
      if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      P t = term();
      out = negative ? out - t : out + t;
    }
    if (first) fail("empty term");
    return out;
  };
  P out = expr();
  if (pos != s.size()) fail("unbalanced )");
  return out;
}

// Image of a rational polynomial in characteristic p (denominators must be
// prime to p).
Polynomial<PrimeField> reduce_mod(const Polynomial<Rationals>& f, const PrimeField& field);

}  // namespace reescm

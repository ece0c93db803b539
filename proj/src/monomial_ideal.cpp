#include "reescm/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "reescm/polynomial.hpp"

namespace reescm {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // Sorting by degree first lets each candidate be tested against the kept
  // lower-degree generators only.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)), gens_(minimalize(std::move(generators))) {}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_square_free() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_square_free(); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(ring_, std::move(all));
}

std::string MonomialIdeal::to_string() const {
  std::string out;
  for (const auto& g : gens_) {
    out += g.to_string(*ring_);
    out += '\n';
  }
  return out;
}

MonomialIdeal parse_monomial_ideal(const std::string& text, const RingPtr& ring) {
  std::istringstream in(text);
  std::string line;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto p = parse_polynomial<Rationals>(line, ring);
    if (p.size() != 1 || !Rationals{}.is_one(p.lead_coeff()))
      throw std::invalid_argument("not a monomial: " + line);
    gens.push_back(p.lead_monomial());
  }
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace reescm

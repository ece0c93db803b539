#pragma once

#include <string>
#include <vector>

#include "reescm/monomial.hpp"

namespace reescm {

// Monomial ideal kept as its minimal generators, sorted decreasingly in the
// lex order of the ring enumeration.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  bool is_square_free() const;
  MonomialIdeal operator+(const MonomialIdeal& other) const;
  bool operator==(const MonomialIdeal& other) const { return gens_ == other.gens_; }

  // One generator per line in the polynomial text syntax.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

// Drops non-minimal and duplicate entries, sorts decreasingly.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal parse_monomial_ideal(const std::string& text, const RingPtr& ring);

}  // namespace reescm

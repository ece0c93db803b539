#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reescm/groebner.hpp"
#include "reescm/instance.hpp"
#include "reescm/matrix.hpp"
#include "reescm/monomial_ideal.hpp"

namespace reescm {

// All k-subsets of {lo..hi} in increasing lexicographic order, each sorted
// increasingly.
std::vector<std::vector<int>> increasing_tuples(int lo, int hi, int k);

template <class K>
struct DeterminantalIdeals {
  std::vector<Polynomial<K>> x_minors;
  std::vector<Polynomial<K>> y_minors;
};

// Maximal minors of the leading s1 x t1 block of X and the s2 x t2 block of Y,
// columns taken in increasing order.
template <class K>
DeterminantalIdeals<K> determinantal_ideals(const Instance& inst, const RingPtr& ring,
                                            const K& field = K{});

// x[i,j] - y[i,j] for all positions, row-major.
template <class K>
std::vector<Polynomial<K>> diagonal_generators(const Instance& inst, const RingPtr& ring,
                                               const K& field = K{});

// Generators of the presentation that is eliminated to obtain the Rees ideal:
// both minor families and z[i,j] - t(x[i,j] - y[i,j]). `ring` must carry t.
template <class K>
std::vector<Polynomial<K>> rees_presentation(const Instance& inst, const RingPtr& ring,
                                             const K& field = K{});

// The ideal of relations of the Rees algebra, as a reduced block-lex
// Gröbner basis obtained by eliminating t.
template <class K>
Ideal<K> rees_ideal_oracle(const Instance& inst, const RingPtr& ring, const K& field = K{},
                           const Budget& budget = {}, GbStats* stats = nullptr);

}  // namespace reescm

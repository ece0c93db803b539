#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reescm/monomial_ideal.hpp"

namespace reescm {

// Square-free monomials and faces as bit sets over ring slots.
using Face = std::uint64_t;

class NotSquareFree : public std::invalid_argument {
 public:
  NotSquareFree() : std::invalid_argument("monomial ideal is not square-free") {}
};

class VertexCapExceeded : public std::runtime_error {
 public:
  VertexCapExceeded(std::size_t vertices, std::size_t cap)
      : std::runtime_error("vertex cap exceeded: " + std::to_string(vertices) + " > " +
                           std::to_string(cap)) {}
};

// 0 means the rationals, otherwise a prime.
struct HomologyField {
  std::uint32_t characteristic = 0;
  std::string name() const;
};

std::vector<Face> supports(const MonomialIdeal& I);
MonomialIdeal from_supports(const RingPtr& ring, const std::vector<Face>& faces);

// Inclusion-minimal elements, sorted.
std::vector<Face> minimal_sets(std::vector<Face> sets);

// Minimal transversals of the hypergraph, by Berge's sequential method.
std::vector<Face> minimal_transversals(const std::vector<Face>& edges);

MonomialIdeal alexander_dual(const MonomialIdeal& I);

// Rank of a sparse matrix whose rows are (column, entry) lists.
using SparseRow = std::vector<std::pair<std::uint32_t, long>>;
std::size_t matrix_rank(std::vector<SparseRow> rows, const HomologyField& field);

// Reduced homology of the simplicial complex with the given faces (closed
// under subsets; an empty list is the void complex). Entry k is H~_{k-1}.
std::vector<std::size_t> reduced_homology(const std::vector<Face>& faces, const HomologyField& field);

// All subsets of the given sets, deduplicated.
std::vector<Face> down_closure(const std::vector<Face>& maximal);

struct BettiEntry {
  int i;
  int j;
  std::size_t rank;
};

// Graded Betti numbers of the ideal: beta_{0,j} counts minimal generators of
// degree j.
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;
  std::string field;

  std::size_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int regularity() const;
  // of the ideal; the quotient has one more
  int projdim() const;
  std::vector<BettiEntry> list() const;
};

struct SquarefreeOptions {
  HomologyField field;
  std::size_t vertex_cap = 24;
  std::size_t max_lattice = 1u << 20;
  unsigned jobs = 1;
};

BettiTable betti_numbers(const std::vector<Face>& gens, const SquarefreeOptions& opts = {});
BettiTable betti_numbers(const MonomialIdeal& I, const SquarefreeOptions& opts = {});

int regularity(const MonomialIdeal& I, const SquarefreeOptions& opts = {});
bool has_linear_resolution(const BettiTable& table);
bool has_linear_resolution(const MonomialIdeal& I, const SquarefreeOptions& opts = {});

// I is Cohen-Macaulay iff its dual has a linear resolution.
bool eagon_reiner_cm(const std::vector<Face>& gens, const SquarefreeOptions& opts = {});
bool eagon_reiner_cm(const MonomialIdeal& I, const SquarefreeOptions& opts = {});

// Reisner's criterion on the Stanley-Reisner complex over the support of I
// (unused variables are cone points and do not matter).
bool reisner_cm(const std::vector<Face>& gens, const SquarefreeOptions& opts = {});
bool reisner_cm(const MonomialIdeal& I, const SquarefreeOptions& opts = {});

// Staircase ideal in the x-block of `ring`: x_{1a_1}...x_{ma_m} with
// a_1 < ... < a_l <= a_{l+1} < ... < a_m <= n.
MonomialIdeal staircase_ideal(const RingPtr& ring, int m, int n, int l);
// Its dual from the product formula over thresholds k_1..k_{m-1}.
MonomialIdeal staircase_dual_closed_form(const RingPtr& ring, int m, int n, int l);

}  // namespace reescm

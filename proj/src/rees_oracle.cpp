#include <numeric>

#include "reescm/rees.hpp"

namespace reescm {

std::vector<std::vector<int>> increasing_tuples(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= hi; ++v) {
      if (hi - v + 1 < k - static_cast<int>(cur.size())) break;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

namespace {

template <class K>
std::vector<Polynomial<K>> maximal_minors(const RingPtr& ring, const K& field,
                                          VariableFamily family, int s, int t) {
  std::vector<int> cols(t);
  std::iota(cols.begin(), cols.end(), 1);
  auto mat = PolyMatrix<K>::of_variables(ring, field, family, 1, s, cols);
  std::vector<std::size_t> rows(s);
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<Polynomial<K>> out;
  for (const auto& c : increasing_tuples(1, t, s)) {
    std::vector<std::size_t> idx;
    for (int v : c) idx.push_back(static_cast<std::size_t>(v - 1));
    out.push_back(mat.submatrix(rows, idx).determinant());
  }
  return out;
}

}  // namespace

template <class K>
DeterminantalIdeals<K> determinantal_ideals(const Instance& inst, const RingPtr& ring,
                                            const K& field) {
  return {maximal_minors(ring, field, VariableFamily::X, inst.s1, inst.t1),
          maximal_minors(ring, field, VariableFamily::Y, inst.s2, inst.t2)};
}

template <class K>
std::vector<Polynomial<K>> diagonal_generators(const Instance& inst, const RingPtr& ring,
                                               const K& field) {
  std::vector<Polynomial<K>> out;
  for (int i = 1; i <= inst.m; ++i)
    for (int j = 1; j <= inst.n; ++j)
      out.push_back(Polynomial<K>::variable(ring, field, Variable::x(i, j)) -
                    Polynomial<K>::variable(ring, field, Variable::y(i, j)));
  return out;
}

template <class K>
std::vector<Polynomial<K>> rees_presentation(const Instance& inst, const RingPtr& ring,
                                             const K& field) {
  if (!ring->has_aux()) throw std::invalid_argument("the Rees presentation needs the variable t");
  auto minors = determinantal_ideals(inst, ring, field);
  std::vector<Polynomial<K>> gens = minors.x_minors;
  gens.insert(gens.end(), minors.y_minors.begin(), minors.y_minors.end());
  const auto t = Polynomial<K>::variable(ring, field, Variable::t());
  auto diff = diagonal_generators(inst, ring, field);
  std::size_t k = 0;
  for (int i = 1; i <= inst.m; ++i)
    for (int j = 1; j <= inst.n; ++j)
      gens.push_back(Polynomial<K>::variable(ring, field, Variable::z(i, j)) - t * diff[k++]);
  return gens;
}

template <class K>
Ideal<K> rees_ideal_oracle(const Instance& inst, const RingPtr& ring, const K& field,
                           const Budget& budget, GbStats* stats) {
  Ideal<K> presentation(ring, field, rees_presentation(inst, ring, field));
  return eliminate(presentation, std::uint64_t{1}, budget, stats);
}

#define REESCM_INSTANTIATE(K)                                                                   \
  template DeterminantalIdeals<K> determinantal_ideals(const Instance&, const RingPtr&,         \
                                                       const K&);                               \
  template std::vector<Polynomial<K>> diagonal_generators(const Instance&, const RingPtr&,      \
                                                          const K&);                            \
  template std::vector<Polynomial<K>> rees_presentation(const Instance&, const RingPtr&,        \
                                                        const K&);                              \
  template Ideal<K> rees_ideal_oracle(const Instance&, const RingPtr&, const K&, const Budget&, \
                                      GbStats*);

REESCM_INSTANTIATE(Rationals)
REESCM_INSTANTIATE(PrimeField)

}  // namespace reescm

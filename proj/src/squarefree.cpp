#include "reescm/squarefree.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include <gmpxx.h>

namespace reescm {

std::string HomologyField::name() const {
  return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

std::vector<Face> supports(const MonomialIdeal& I) {
  if (!I.is_square_free()) throw NotSquareFree();
  std::vector<Face> out;
  for (const auto& g : I.generators()) out.push_back(g.support());
  return out;
}

MonomialIdeal from_supports(const RingPtr& ring, const std::vector<Face>& faces) {
  std::vector<Monomial> gens;
  for (Face f : faces) {
    Monomial m;
    for (Face r = f; r; r &= r - 1) m.set(static_cast<std::size_t>(std::countr_zero(r)), 1);
    gens.push_back(m);
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<Face> minimal_sets(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end(), [](Face a, Face b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> kept;
  for (Face s : sets)
    if (std::none_of(kept.begin(), kept.end(), [&](Face k) { return (k & s) == k; })) kept.push_back(s);
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Face> minimal_transversals(const std::vector<Face>& edges) {
  for (Face e : edges)
    if (e == 0) return {};  // nothing meets the empty edge
  std::vector<Face> tr{0};
  for (Face e : minimal_sets(edges)) {
    std::vector<Face> next;
    for (Face t : tr) {
      if (t & e) {
        next.push_back(t);
        continue;
      }
      for (Face r = e; r; r &= r - 1) next.push_back(t | (r & -r));
    }
    tr = minimal_sets(std::move(next));
  }
  return tr;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
  return from_supports(I.ring(), minimal_transversals(supports(I)));
}

namespace {

// Echelon insertion; rows kept sorted by column, keyed by their first column.
template <class Coef, class Ops>
std::size_t echelon_rank(std::vector<std::vector<std::pair<std::uint32_t, Coef>>> rows, Ops ops) {
  using Row = std::vector<std::pair<std::uint32_t, Coef>>;
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.size() < b.size(); });
  std::unordered_map<std::uint32_t, Row> pivots;
  Row scratch;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        ops.normalize(row);
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      const Row& piv = it->second;
      Coef a, b;
      ops.factors(piv.front().second, row.front().second, a, b);
      // row := a*row - b*piv
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
          scratch.emplace_back(row[i].first, ops.mul(a, row[i].second));
          ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
          scratch.emplace_back(piv[j].first, ops.neg(ops.mul(b, piv[j].second)));
          ++j;
        } else {
          Coef v = ops.sub(ops.mul(a, row[i].second), ops.mul(b, piv[j].second));
          if (!ops.is_zero(v)) scratch.emplace_back(row[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      std::swap(row, scratch);
    }
  }
  return pivots.size();
}

struct IntegerOps {
  void factors(const mpz_class& p, const mpz_class& r, mpz_class& a, mpz_class& b) const {
    mpz_class g = gcd(p, r);
    a = p / g;
    b = r / g;
  }
  mpz_class mul(const mpz_class& a, const mpz_class& b) const { return a * b; }
  mpz_class sub(const mpz_class& a, const mpz_class& b) const { return a - b; }
  mpz_class neg(const mpz_class& a) const { return -a; }
  bool is_zero(const mpz_class& a) const { return a == 0; }
  void normalize(std::vector<std::pair<std::uint32_t, mpz_class>>& row) const {
    mpz_class g = 0;
    for (const auto& e : row) g = gcd(g, e.second);
    if (g > 1)
      for (auto& e : row) e.second /= g;
  }
};

struct ModOps {
  std::uint64_t p;
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
  void factors(std::uint64_t piv, std::uint64_t r, std::uint64_t& a, std::uint64_t& b) const {
    a = 1;
    b = r * inv(piv) % p;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t neg(std::uint64_t a) const { return (p - a) % p; }
  bool is_zero(std::uint64_t a) const { return a == 0; }
  void normalize(std::vector<std::pair<std::uint32_t, std::uint64_t>>&) const {}
};

}  // namespace

std::size_t matrix_rank(std::vector<SparseRow> rows, const HomologyField& field) {
  if (field.characteristic == 0) {
    std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> z;
    z.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<std::pair<std::uint32_t, mpz_class>> zr;
      for (const auto& [c, v] : r)
        if (v != 0) zr.emplace_back(c, mpz_class(v));
      z.push_back(std::move(zr));
    }
    return echelon_rank(std::move(z), IntegerOps{});
  }
  const std::uint64_t p = field.characteristic;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> mr;
    for (const auto& [c, v] : r) {
      long rv = v % static_cast<long>(p);
      if (rv < 0) rv += static_cast<long>(p);
      if (rv) mr.emplace_back(c, static_cast<std::uint64_t>(rv));
    }
    m.push_back(std::move(mr));
  }
  return echelon_rank(std::move(m), ModOps{p});
}

std::vector<Face> down_closure(const std::vector<Face>& maximal) {
  std::unordered_set<Face> seen;
  for (Face top : maximal) {
    if (seen.count(top)) continue;
    Face s = top;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & top;
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> reduced_homology(const std::vector<Face>& faces, const HomologyField& field) {
  if (faces.empty()) return {};
  int top = -1;
  for (Face f : faces) top = std::max(top, std::popcount(f) - 1);
  // by_dim[k + 1] lists the k-faces
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(top + 2));
  for (Face f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  std::vector<std::unordered_map<Face, std::uint32_t>> index(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    std::sort(by_dim[d].begin(), by_dim[d].end());
    for (std::uint32_t i = 0; i < by_dim[d].size(); ++i) index[d].emplace(by_dim[d][i], i);
  }
  // rank of the boundary from (d-1)-faces (size d) to size d-1
  std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
  for (std::size_t d = 1; d < by_dim.size(); ++d) {
    std::vector<SparseRow> rows;
    rows.reserve(by_dim[d].size());
    for (Face f : by_dim[d]) {
      SparseRow row;
      int pos = 0;
      for (Face r = f; r; r &= r - 1, ++pos) {
        Face sub = f & ~(r & -r);
        auto it = index[d - 1].find(sub);
        if (it == index[d - 1].end()) throw std::invalid_argument("face list is not closed under subsets");
        row.emplace_back(it->second, pos % 2 == 0 ? 1 : -1);
      }
      rows.push_back(std::move(row));
    }
    ranks[d] = matrix_rank(std::move(rows), field);
  }
  std::vector<std::size_t> out(by_dim.size(), 0);
  for (std::size_t d = 0; d < by_dim.size(); ++d)
    out[d] = by_dim[d].size() - ranks[d] - ranks[d + 1];
  return out;
}

int BettiTable::regularity() const {
  int reg = std::numeric_limits<int>::min();
  for (const auto& [ij, r] : entries)
    if (r) reg = std::max(reg, ij.second - ij.first);
  return reg;
}

int BettiTable::projdim() const {
  int pd = -1;
  for (const auto& [ij, r] : entries)
    if (r) pd = std::max(pd, ij.first);
  return pd;
}

std::vector<BettiEntry> BettiTable::list() const {
  std::vector<BettiEntry> out;
  for (const auto& [ij, r] : entries)
    if (r) out.push_back({ij.first, ij.second, r});
  return out;
}

namespace {

Face vertex_set(const std::vector<Face>& gens) {
  Face v = 0;
  for (Face g : gens) v |= g;
  return v;
}

void check_cap(Face vertices, std::size_t cap) {
  const auto n = static_cast<std::size_t>(std::popcount(vertices));
  if (n > cap) throw VertexCapExceeded(n, cap);
}

void check_proper(const std::vector<Face>& gens) {
  if (gens.empty()) throw std::invalid_argument("the zero ideal has no Stanley-Reisner data here");
  for (Face g : gens)
    if (g == 0) throw std::invalid_argument("the unit ideal is not allowed");
}

std::vector<Face> lcm_lattice(const std::vector<Face>& gens, std::size_t cap) {
  std::unordered_set<Face> seen;
  std::vector<Face> all;
  for (Face g : gens) {
    std::vector<Face> add;
    if (seen.insert(g).second) add.push_back(g);
    for (Face x : all) {
      Face u = x | g;
      if (seen.insert(u).second) add.push_back(u);
    }
    all.insert(all.end(), add.begin(), add.end());
    if (all.size() > cap)
      throw std::runtime_error("lcm lattice larger than " + std::to_string(cap));
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Face> minimal_sets_max(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end(), [](Face a, Face b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> kept;
  for (Face s : sets)
    if (std::none_of(kept.begin(), kept.end(), [&](Face k) { return (k & s) == s; })) kept.push_back(s);
  return kept;
}

std::size_t subset_cost(const std::vector<Face>& maximal) {
  std::size_t c = 0;
  for (Face f : maximal) c += std::size_t{1} << std::min(40, std::popcount(f));
  return c;
}

}  // namespace

BettiTable betti_numbers(const std::vector<Face>& raw, const SquarefreeOptions& opts) {
  check_proper(raw);
  const auto gens = minimal_sets(raw);
  const Face V = vertex_set(gens);
  check_cap(V, opts.vertex_cap);
  // facets of the Stanley-Reisner complex on V
  std::vector<Face> facets;
  for (Face t : minimal_transversals(gens)) facets.push_back(V & ~t);
  const auto lattice = lcm_lattice(gens, opts.max_lattice);

  auto work = [&](std::size_t lo, std::size_t hi) {
    std::map<std::pair<int, int>, std::size_t> part;
    for (std::size_t k = lo; k < hi; ++k) {
      const Face sigma = lattice[k];
      const int s = std::popcount(sigma);
      std::vector<Face> upper, lower;
      for (Face g : gens)
        if ((g & sigma) == g) upper.push_back(sigma & ~g);
      for (Face f : facets) lower.push_back(f & sigma);
      if (subset_cost(upper) <= subset_cost(lower)) {
        // upper Koszul complex: beta_{i,sigma} = H~_{i-1}
        auto h = reduced_homology(down_closure(minimal_sets_max(upper)), opts.field);
        for (std::size_t d = 0; d < h.size(); ++d)
          if (h[d]) part[{static_cast<int>(d), s}] += h[d];
      } else {
        // restriction: beta_{i,sigma} = H~_{s-i-2}
        auto h = reduced_homology(down_closure(minimal_sets_max(lower)), opts.field);
        for (std::size_t d = 0; d < h.size(); ++d)
          if (h[d]) part[{s - static_cast<int>(d) - 1, s}] += h[d];
      }
    }
    return part;
  };

  BettiTable table;
  table.field = opts.field.name();
  const unsigned jobs = std::max(1u, opts.jobs);
  const std::size_t chunk = (lattice.size() + jobs - 1) / jobs;
  std::vector<std::future<std::map<std::pair<int, int>, std::size_t>>> futures;
  for (unsigned w = 1; w < jobs; ++w) {
    const std::size_t lo = std::min(lattice.size(), w * chunk);
    const std::size_t hi = std::min(lattice.size(), lo + chunk);
    futures.push_back(std::async(std::launch::async, work, lo, hi));
  }
  auto merge = [&](const std::map<std::pair<int, int>, std::size_t>& part) {
    for (const auto& [k, v] : part) table.entries[k] += v;
  };
  merge(work(0, std::min(lattice.size(), chunk)));
  for (auto& f : futures) merge(f.get());
  return table;
}

BettiTable betti_numbers(const MonomialIdeal& I, const SquarefreeOptions& opts) {
  return betti_numbers(supports(I), opts);
}

int regularity(const MonomialIdeal& I, const SquarefreeOptions& opts) {
  return betti_numbers(I, opts).regularity();
}

bool has_linear_resolution(const BettiTable& table) {
  int d = -1;
  for (const auto& [ij, r] : table.entries) {
    if (!r) continue;
    if (d < 0) d = ij.second - ij.first;
    if (ij.second - ij.first != d) return false;
  }
  return true;
}

bool has_linear_resolution(const MonomialIdeal& I, const SquarefreeOptions& opts) {
  return has_linear_resolution(betti_numbers(I, opts));
}

bool eagon_reiner_cm(const std::vector<Face>& gens, const SquarefreeOptions& opts) {
  check_proper(gens);
  return has_linear_resolution(betti_numbers(minimal_transversals(gens), opts));
}

bool eagon_reiner_cm(const MonomialIdeal& I, const SquarefreeOptions& opts) {
  return eagon_reiner_cm(supports(I), opts);
}

bool reisner_cm(const std::vector<Face>& raw, const SquarefreeOptions& opts) {
  check_proper(raw);
  const auto gens = minimal_sets(raw);
  const Face V = vertex_set(gens);
  check_cap(V, opts.vertex_cap);
  std::vector<Face> facets;
  for (Face t : minimal_transversals(gens)) facets.push_back(V & ~t);
  facets = minimal_sets_max(std::move(facets));
  for (Face F : down_closure(facets)) {
    std::vector<Face> link_facets;
    for (Face f : facets)
      if ((f & F) == F) link_facets.push_back(f & ~F);
    link_facets = minimal_sets_max(std::move(link_facets));
    int dim = -1;
    for (Face f : link_facets) dim = std::max(dim, std::popcount(f) - 1);
    const auto h = reduced_homology(down_closure(link_facets), opts.field);
    // entry k is H~_{k-1}; need H~_i = 0 for i < dim
    for (int i = -1; i < dim; ++i)
      if (h[static_cast<std::size_t>(i + 1)]) return false;
  }
  return true;
}

bool reisner_cm(const MonomialIdeal& I, const SquarefreeOptions& opts) {
  return reisner_cm(supports(I), opts);
}

namespace {

void check_staircase(const RingPtr& ring, int m, int n, int l) {
  if (m < 1 || n < 1 || l < 1 || l > m - 1 || m > n)
    throw std::invalid_argument("staircase needs 1 <= l <= m-1 and m <= n");
  if (ring->rows() < m || ring->cols() < n) throw std::invalid_argument("ring too small for staircase");
}

}  // namespace

MonomialIdeal staircase_ideal(const RingPtr& ring, int m, int n, int l) {
  check_staircase(ring, m, n, l);
  std::vector<Monomial> gens;
  std::vector<int> a(static_cast<std::size_t>(m));
  auto rec = [&](auto&& self, int r, int lo) -> void {
    if (r == m) {
      Monomial mon;
      for (int i = 0; i < m; ++i) mon.set(ring->index_of(Variable::x(i + 1, a[static_cast<std::size_t>(i)])), 1);
      gens.push_back(mon);
      return;
    }
    for (int c = lo; c <= n; ++c) {
      a[static_cast<std::size_t>(r)] = c;
      // a_l <= a_{l+1}, strict elsewhere
      self(self, r + 1, r + 1 == l ? c : c + 1);
    }
  };
  rec(rec, 0, 1);
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal staircase_dual_closed_form(const RingPtr& ring, int m, int n, int l) {
  check_staircase(ring, m, n, l);
  // row r covers columns k_{r-1} + delta_r .. k_r, k_0 = -1, k_m = n
  auto delta = [&](int r) { return r == l + 1 ? 1 : 2; };
  std::vector<Monomial> gens;
  std::vector<int> k(static_cast<std::size_t>(m + 1));
  k[0] = -1;
  k[static_cast<std::size_t>(m)] = n;
  auto emit = [&] {
    Monomial mon;
    for (int r = 1; r <= m; ++r)
      for (int c = k[static_cast<std::size_t>(r - 1)] + delta(r); c <= k[static_cast<std::size_t>(r)]; ++c)
        mon.set(ring->index_of(Variable::x(r, c)), 1);
    gens.push_back(mon);
  };
  auto rec = [&](auto&& self, int r) -> void {
    if (r == m) {
      if (n - k[static_cast<std::size_t>(m - 1)] >= delta(m) - 1) emit();
      return;
    }
    for (int v = k[static_cast<std::size_t>(r - 1)] + delta(r) - 1; v <= n; ++v) {
      k[static_cast<std::size_t>(r)] = v;
      self(self, r + 1);
    }
  };
  rec(rec, 1);
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace reescm

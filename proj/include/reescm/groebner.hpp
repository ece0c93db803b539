#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "reescm/monomial_ideal.hpp"
#include "reescm/polynomial.hpp"

namespace reescm {

// Resource caps for Gröbner computations. Exceeding one is reported as
// BudgetExceeded, never as a truncated answer.
struct Budget {
  std::size_t max_pairs = 2'000'000;
  std::size_t max_terms = 200'000;
  std::size_t max_basis = 20'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error("budget exceeded: " + what) {}
};

class NotGroebnerBasis : public std::invalid_argument {
 public:
  NotGroebnerBasis() : std::invalid_argument("generators are not a Gröbner basis") {}
};

struct GbTracePoint {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

// Machine-readable run log.
struct GbStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t pruned_coprime = 0;
  std::size_t pruned_chain = 0;
  std::vector<GbTracePoint> trace;
};

namespace detail {

template <class K>
std::optional<std::size_t> find_reducer(const Monomial& m, const std::vector<Polynomial<K>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && basis[i].lead_monomial().divides(m)) return i;
  return std::nullopt;
}

template <class K>
Polynomial<K> reduce_impl(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                          std::size_t max_terms) {
  const K& field = f.field();
  std::vector<Term<K>> remainder;
  Polynomial<K> p = f;
  while (!p.is_zero()) {
    if (p.size() > max_terms) throw BudgetExceeded("polynomial exceeds " + std::to_string(max_terms) + " terms");
    const auto& lt = p.leading();
    if (auto r = find_reducer(lt.mono, basis)) {
      const auto& g = basis[*r];
      auto c = field.neg(field.div(lt.coeff, g.lead_coeff()));
      p = p.add_multiple(c, lt.mono / g.lead_monomial(), g);
    } else {
      remainder.push_back(lt);
      std::vector<Term<K>> rest(p.terms().begin() + 1, p.terms().end());
      p = Polynomial<K>::from_terms(p.ring(), field, std::move(rest));
    }
  }
  // Remainder terms were emitted in decreasing order already.
  return Polynomial<K>::from_terms(f.ring(), field, std::move(remainder));
}

}  // namespace detail

// Full normal form of f modulo G: no term of the result is divisible by a
// leading monomial of G, and f - result lies in the ideal of G.
template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G,
                     TermOrder /*ord*/ = TermOrder::BlockLex,
                     std::size_t max_terms = Budget{}.max_terms) {
  return detail::reduce_impl(f, G, max_terms);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           TermOrder /*ord*/ = TermOrder::BlockLex) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  const K& field = f.field();
  const Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  auto a = f.shifted(l / f.lead_monomial()).scaled(field.inv(f.lead_coeff()));
  return a.add_multiple(field.neg(field.inv(g.lead_coeff())), l / g.lead_monomial(), g);
}

// Removes redundant leading terms, reduces tails, makes monic and sorts by
// decreasing leading monomial.
template <class K>
std::vector<Polynomial<K>> auto_reduce(std::vector<Polynomial<K>> basis,
                                       std::size_t max_terms = Budget{}.max_terms) {
  basis.erase(std::remove_if(basis.begin(), basis.end(), [](const auto& p) { return p.is_zero(); }),
              basis.end());
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    if (a.lead_monomial().degree() != b.lead_monomial().degree())
      return a.lead_monomial().degree() < b.lead_monomial().degree();
    return a.lead_monomial() < b.lead_monomial();
  });
  std::vector<Polynomial<K>> minimal;
  for (auto& p : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& q) {
      return q.lead_monomial().divides(p.lead_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial<K>> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(detail::reduce_impl(minimal[i], others, max_terms).monic());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.lead_monomial() > b.lead_monomial(); });
  return out;
}

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// degree first) and the Gebauer-Möller installation of Buchberger's
// coprime and chain criteria. Returns the reduced Gröbner basis.
template <class K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& generators,
                                      TermOrder ord = TermOrder::BlockLex,
                                      const Budget& budget = {}, GbStats* stats = nullptr) {
  GbStats local;
  GbStats& st = stats ? *stats : local;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Polynomial<K>> store;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto install = [&](Polynomial<K> h) {
    const std::size_t hi = store.size();
    store.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = store[hi].lead_monomial();
    // New pairs (g, h) surviving the chain criterion among themselves.
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) candidates.push_back({g, hi, store[g].lead_monomial().lcm(lh)});
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& pa = candidates[a];
      if (store[pa.i].lead_monomial().coprime(lh)) {
        kept.push_back(pa);
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (b == a) continue;
        const auto& pb = candidates[b];
        if (pb.lcm.divides(pa.lcm)) {
          // Strict divisibility, or equal lcm and an earlier index, discards pa.
          if (!(pb.lcm == pa.lcm) || b < a) dominated = true;
        }
      }
      if (dominated)
        ++st.pruned_chain;
      else
        kept.push_back(pa);
    }
    // Drop the coprime ones (first criterion).
    std::vector<Pair> fresh;
    for (auto& p : kept) {
      if (store[p.i].lead_monomial().coprime(lh))
        ++st.pruned_coprime;
      else
        fresh.push_back(p);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    old.reserve(pairs.size());
    for (auto& p : pairs) {
      if (lh.divides(p.lcm) && !(store[p.i].lead_monomial().lcm(lh) == p.lcm) &&
          !(store[p.j].lead_monomial().lcm(lh) == p.lcm)) {
        ++st.pruned_chain;
        continue;
      }
      old.push_back(std::move(p));
    }
    pairs = std::move(old);
    for (auto& p : fresh) pairs.push_back(std::move(p));
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(store[g].lead_monomial())) active[g] = false;
    if (store.size() > budget.max_basis)
      throw BudgetExceeded("basis exceeds " + std::to_string(budget.max_basis) + " elements");
    std::size_t live = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
    st.trace.push_back({st.pairs_processed, st.zero_reductions, live});
  };

  auto active_basis = [&]() {
    std::vector<Polynomial<K>> out;
    for (std::size_t i = 0; i < store.size(); ++i)
      if (active[i]) out.push_back(store[i]);
    return out;
  };

  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    auto h = detail::reduce_impl(f, active_basis(), budget.max_terms);
    if (!h.is_zero()) install(h.monic());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      return a.lcm < b.lcm;
    });
    Pair p = *best;
    *best = pairs.back();
    pairs.pop_back();
    if (++st.pairs_processed > budget.max_pairs)
      throw BudgetExceeded("more than " + std::to_string(budget.max_pairs) + " S-pairs");
    auto s = s_polynomial(store[p.i], store[p.j], ord);
    auto h = detail::reduce_impl(s, active_basis(), budget.max_terms);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    install(h.monic());
  }
  auto result = auto_reduce(active_basis(), budget.max_terms);
  st.trace.push_back({st.pairs_processed, st.zero_reductions, result.size()});
  return result;
}

template <class K>
struct GbFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial<K> remainder;
};

template <class K>
struct GbCertificate {
  bool is_basis = true;
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t failure_count = 0;
  std::vector<GbFailure<K>> failures;
};

// Buchberger criterion: every S-pair with non-coprime leading monomials must
// reduce to zero. Pairs are distributed over `jobs` worker threads that share
// the (read-only) basis.
template <class K>
GbCertificate<K> is_groebner_basis(const std::vector<Polynomial<K>>& G,
                                   TermOrder ord = TermOrder::BlockLex, unsigned jobs = 1,
                                   std::size_t max_failures = 16,
                                   std::size_t max_terms = Budget{}.max_terms,
                                   std::size_t max_pairs = Budget{}.max_pairs) {
  GbCertificate<K> cert;
  std::vector<Polynomial<K>> basis;
  for (const auto& g : G)
    if (!g.is_zero()) basis.push_back(g);
  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].lead_monomial().coprime(basis[j].lead_monomial()))
        ++cert.pairs_skipped_coprime;
      else
        todo.emplace_back(i, j);
    }
  cert.pairs_checked = todo.size();
  if (todo.size() > max_pairs)
    throw BudgetExceeded(std::to_string(todo.size()) + " S-pairs, cap " + std::to_string(max_pairs));
  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    std::vector<GbFailure<K>> found;
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      auto [i, j] = todo[k];
      auto r = detail::reduce_impl(s_polynomial(basis[i], basis[j], ord), basis, max_terms);
      if (!r.is_zero()) found.push_back({i, j, std::move(r)});
    }
    return found;
  };
  std::vector<std::future<std::vector<GbFailure<K>>>> futures;
  for (unsigned w = 1; w < jobs; ++w) futures.push_back(std::async(std::launch::async, worker));
  auto failures = worker();
  for (auto& f : futures) {
    auto more = f.get();
    failures.insert(failures.end(), std::make_move_iterator(more.begin()),
                    std::make_move_iterator(more.end()));
  }
  std::sort(failures.begin(), failures.end(), [](const auto& a, const auto& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  cert.is_basis = failures.empty();
  cert.failure_count = failures.size();
  if (failures.size() > max_failures) failures.erase(failures.begin() + static_cast<std::ptrdiff_t>(max_failures), failures.end());
  cert.failures = std::move(failures);
  return cert;
}

template <class K>
MonomialIdeal initial_ideal(const std::vector<Polynomial<K>>& G, TermOrder ord = TermOrder::BlockLex,
                            bool check = false) {
  if (G.empty()) throw std::invalid_argument("initial ideal of an empty generator list");
  if (check && !is_groebner_basis(G, ord).is_basis) throw NotGroebnerBasis();
  std::vector<Monomial> leads;
  for (const auto& g : G)
    if (!g.is_zero()) leads.push_back(g.lead_monomial());
  return MonomialIdeal(G.front().ring(), std::move(leads));
}

// Ideal with a lazily computed Gröbner basis cached together with its order.
template <class K>
class Ideal {
 public:
  Ideal(RingPtr ring, K field, std::vector<Polynomial<K>> generators)
      : ring_(std::move(ring)), field_(std::move(field)), gens_(std::move(generators)) {}

  const RingPtr& ring() const { return ring_; }
  const K& field() const { return field_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }

  bool has_basis(TermOrder ord) const { return cache_ && cache_order_ == ord; }

  const std::vector<Polynomial<K>>& groebner_basis(TermOrder ord, const Budget& budget = {},
                                                   GbStats* stats = nullptr) const {
    if (!has_basis(ord)) {
      cache_ = buchberger(gens_, ord, budget, stats);
      cache_order_ = ord;
    }
    return *cache_;
  }

  // Installs a basis computed elsewhere (e.g. a certified candidate).
  void adopt_basis(TermOrder ord, std::vector<Polynomial<K>> basis) const {
    cache_ = std::move(basis);
    cache_order_ = ord;
  }

 private:
  RingPtr ring_;
  K field_;
  std::vector<Polynomial<K>> gens_;
  mutable std::optional<std::vector<Polynomial<K>>> cache_;
  mutable TermOrder cache_order_ = TermOrder::BlockLex;
};

template <class K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& I, TermOrder ord = TermOrder::BlockLex,
                      const Budget& budget = {}) {
  const auto& gb = I.groebner_basis(ord, budget);
  if (gb.empty()) return f.is_zero();
  return detail::reduce_impl(f, gb, budget.max_terms).is_zero();
}

// I ∩ k[remaining variables]. The dropped variables must be the leading
// slots of the ring enumeration (the auxiliary t), which is exactly what the
// elimination order ranks above everything else.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, std::uint64_t drop_mask, const Budget& budget = {},
                   GbStats* stats = nullptr) {
  if (drop_mask & (drop_mask + 1))
    throw std::invalid_argument("only a leading block of variables can be eliminated");
  if (drop_mask != 0 && std::countr_one(drop_mask) > static_cast<int>(I.ring()->size()))
    throw std::invalid_argument("eliminated variables are not in the ring");
  const auto& gb = I.groebner_basis(TermOrder::Elimination, budget, stats);
  std::vector<Polynomial<K>> kept;
  for (const auto& g : gb) {
    bool free_of_dropped = true;
    for (const auto& t : g.terms())
      if (t.mono.support() & drop_mask) {
        free_of_dropped = false;
        break;
      }
    if (free_of_dropped) kept.push_back(g);
  }
  Ideal<K> out(I.ring(), I.field(), kept);
  // A lex basis restricted to the lower block is a basis of the elimination
  // ideal in the same order.
  out.adopt_basis(TermOrder::BlockLex, kept);
  return out;
}

}  // namespace reescm

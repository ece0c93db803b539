#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "reescm/squarefree.hpp"
#include "reescm/verify.hpp"

using namespace reescm;

namespace {

constexpr Face x = 1, y = 2, z = 4, w = 8;

// dense rank over QQ
std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// reduced Betti numbers of the complex on `vertices` whose faces avoid
// every generator, entry k = H~_{k-1}
std::vector<std::size_t> homology_of_restriction(Face vertices, const std::vector<Face>& gens) {
  std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(std::popcount(vertices)) + 1);
  for (Face s = vertices;; s = (s - 1) & vertices) {
    if (std::none_of(gens.begin(), gens.end(), [&](Face g) { return (g & s) == g; }))
      by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    if (s == 0) break;
  }
  while (!by_size.empty() && by_size.back().empty()) by_size.pop_back();
  std::vector<std::size_t> rk(by_size.size() + 1, 0);
  for (std::size_t d = 1; d < by_size.size(); ++d) {
    std::vector<std::vector<mpq_class>> m(by_size[d].size(), std::vector<mpq_class>(by_size[d - 1].size()));
    for (std::size_t i = 0; i < by_size[d].size(); ++i) {
      int sign = 1;
      for (Face r = by_size[d][i]; r; r &= r - 1, sign = -sign) {
        Face sub = by_size[d][i] & ~(r & -r);
        auto it = std::find(by_size[d - 1].begin(), by_size[d - 1].end(), sub);
        m[i][static_cast<std::size_t>(it - by_size[d - 1].begin())] = sign;
      }
    }
    rk[d] = dense_rank(m);
  }
  std::vector<std::size_t> h(by_size.size());
  for (std::size_t d = 0; d < by_size.size(); ++d) h[d] = by_size[d].size() - rk[d] - rk[d + 1];
  return h;
}

// Hochster over every subset of the vertices
std::map<std::pair<int, int>, std::size_t> betti_oracle(const std::vector<Face>& gens) {
  Face V = 0;
  for (Face g : gens) V |= g;
  std::map<std::pair<int, int>, std::size_t> out;
  // the empty subset only carries the quotient's beta_{0,0}
  for (Face s = V; s; s = (s - 1) & V) {
    const int n = std::popcount(s);
    auto h = homology_of_restriction(s, gens);
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k]) out[{n - static_cast<int>(k) - 1, n}] += h[k];
  }
  return out;
}

std::vector<Face> brute_transversals(const std::vector<Face>& gens, Face V) {
  std::vector<Face> hit;
  for (Face T = V;; T = (T - 1) & V) {
    if (std::all_of(gens.begin(), gens.end(), [&](Face g) { return (g & T) != 0; })) hit.push_back(T);
    if (T == 0) break;
  }
  std::vector<Face> out;
  for (Face T : hit)
    if (std::none_of(hit.begin(), hit.end(), [&](Face U) { return U != T && (U & T) == U; })) out.push_back(T);
  std::sort(out.begin(), out.end());
  return out;
}

// Stanley-Reisner ideal of the complex with these facets on vertices 0..n-1
std::vector<Face> ideal_of_facets(const std::vector<Face>& facets, int n) {
  std::vector<Face> nonfaces;
  for (Face s = 1; s < (Face{1} << n); ++s)
    if (std::none_of(facets.begin(), facets.end(), [&](Face f) { return (s & f) == s; })) nonfaces.push_back(s);
  return minimal_sets(nonfaces);
}

Face face_of(std::initializer_list<int> vs) {
  Face f = 0;
  for (int v : vs) f |= Face{1} << (v - 1);
  return f;
}

SquarefreeOptions over(std::uint32_t p) {
  SquarefreeOptions o;
  o.field.characteristic = p;
  return o;
}

}  // namespace

TEST_CASE("alexander dual small cases") {
  CHECK(minimal_transversals({x | y}) == std::vector<Face>{x, y});
  CHECK(minimal_transversals({x, y}) == std::vector<Face>{x | y});
  auto r = make_ring(2, 2, false);
  auto I = parse_monomial_ideal("x[1,1]*x[2,1]\nx[1,1]*x[2,2]\nx[1,2]*x[2,2]", r);
  auto want = parse_monomial_ideal("x[2,1]*x[2,2]\nx[1,1]*x[2,2]\nx[1,1]*x[1,2]", r);
  CHECK(alexander_dual(I) == want);
  Face V = 0;
  for (Face f : supports(I)) V |= f;
  auto got = supports(want);
  std::sort(got.begin(), got.end());
  CHECK(got == brute_transversals(supports(I), V));
  CHECK(alexander_dual(alexander_dual(I)) == I);
  CHECK(staircase_dual_closed_form(r, 2, 2, 1) == want);
}

TEST_CASE("non-square-free input is rejected") {
  auto r = make_ring(2, 2, false);
  CHECK_THROWS_AS(alexander_dual(parse_monomial_ideal("x[1,1]^2", r)), NotSquareFree);
  CHECK_THROWS_AS(betti_numbers(parse_monomial_ideal("x[1,1]^2*x[1,2]", r)), NotSquareFree);
}

TEST_CASE("sparse rank") {
  std::vector<SparseRow> m{{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{1, 3}, {2, 1}}};
  CHECK(matrix_rank(m, {}) == 2);
  std::vector<SparseRow> m2{{{0, 2}, {1, 1}}, {{0, 1}, {1, 2}}};  // det 3
  CHECK(matrix_rank(m2, {}) == 2);
  CHECK(matrix_rank(m2, HomologyField{3}) == 1);
  CHECK(matrix_rank({}, {}) == 0);
}

TEST_CASE("reduced homology") {
  // hollow triangle
  auto tri = down_closure({x | y, y | z, x | z});
  auto h = reduced_homology(tri, {});
  CHECK(h == std::vector<std::size_t>{0, 0, 1});
  CHECK(reduced_homology({}, {}).empty());
  CHECK(reduced_homology({0}, {}) == std::vector<std::size_t>{1});
  // two points
  CHECK(reduced_homology(down_closure({x, y}), {}) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS(reduced_homology({x | y}, {}));
}

TEST_CASE("betti tables of small ideals") {
  auto t1 = betti_numbers({x | y});
  CHECK(t1.list().size() == 1);
  CHECK(t1.at(0, 2) == 1);
  auto t2 = betti_numbers({x, y, z});
  CHECK(t2.at(0, 1) == 3);
  CHECK(t2.at(1, 2) == 3);
  CHECK(t2.at(2, 3) == 1);
  CHECK(t2.list().size() == 3);
  auto t3 = betti_numbers({x | y, y | z, x | z});
  CHECK(t3.at(0, 2) == 3);
  CHECK(t3.at(1, 3) == 2);
  CHECK(t3.list().size() == 2);
  auto t4 = betti_numbers({x, y});
  CHECK(t4.regularity() == 1);
  CHECK(has_linear_resolution(t4));
  auto t5 = betti_numbers({x | y, z | w});
  CHECK(t5.at(0, 2) == 2);
  CHECK(t5.at(1, 4) == 1);
  CHECK(t5.regularity() == 3);
  CHECK_FALSE(has_linear_resolution(t5));
}

TEST_CASE("koszul closed forms") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Face> vars;
    for (int v = 0; v < n; ++v) vars.push_back(Face{1} << v);
    auto t = betti_numbers(vars);
    std::size_t binom = 1;  // C(n, i+1)
    for (int i = 0; i < n; ++i) {
      binom = binom * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
      CHECK(t.at(i, i + 1) == binom);
    }
    CHECK(t.list().size() == static_cast<std::size_t>(n));
    CHECK(t.projdim() == n - 1);
  }
}

TEST_CASE("betti numbers against full hochster") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<Face> gens;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int g = 0; g < k; ++g) {
      Face f = 0;
      while (!f) f = rng() & ((Face{1} << n) - 1);
      gens.push_back(f);
    }
    gens = minimal_sets(gens);
    CAPTURE(trial);
    SquarefreeOptions o;
    o.jobs = 1 + static_cast<unsigned>(trial % 3);
    CHECK(betti_numbers(gens, o).entries == betti_oracle(gens));
  }
}

TEST_CASE("vertex cap") {
  std::vector<Face> gens;
  for (int v = 0; v < 26; ++v) gens.push_back(Face{1} << v);
  CHECK_THROWS_AS(betti_numbers(gens), VertexCapExceeded);
  SquarefreeOptions o;
  o.vertex_cap = 30;
  CHECK_NOTHROW(betti_numbers(std::vector<Face>{gens.begin(), gens.begin() + 4}, o));
}

TEST_CASE("cohen-macaulay criteria") {
  CHECK(eagon_reiner_cm({x | y}));
  CHECK(reisner_cm({x | y}));
  CHECK_FALSE(eagon_reiner_cm({x | z, x | w, y | z, y | w}));
  CHECK_FALSE(reisner_cm({x | z, x | w, y | z, y | w}));
  CHECK(reisner_cm({x | y | z}));
  CHECK(eagon_reiner_cm({x | y | z}));
  // complete intersection
  CHECK(reisner_cm({x | y, z | w}));
  CHECK(eagon_reiner_cm({x | y, z | w}));
}

TEST_CASE("projective plane depends on the characteristic") {
  // six-vertex triangulation of RP^2
  std::vector<Face> facets{face_of({1, 2, 4}), face_of({1, 2, 6}), face_of({1, 3, 5}), face_of({1, 3, 6}),
                           face_of({1, 4, 5}), face_of({2, 3, 4}), face_of({2, 3, 5}), face_of({2, 5, 6}),
                           face_of({3, 4, 6}), face_of({4, 5, 6})};
  auto I = ideal_of_facets(facets, 6);
  CHECK(reisner_cm(I, over(0)));
  CHECK(eagon_reiner_cm(I, over(0)));
  CHECK_FALSE(reisner_cm(I, over(2)));
  CHECK_FALSE(eagon_reiner_cm(I, over(2)));
  CHECK(betti_numbers(I, over(2)).entries != betti_numbers(I, over(0)).entries);
  CHECK(betti_numbers(I, over(101)).entries == betti_numbers(I, over(0)).entries);
}

TEST_CASE("random duality properties") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Face> gens;
    for (int g = 0, k = 1 + static_cast<int>(rng() % 6); g < k; ++g) {
      Face f = 0;
      while (!f) f = rng() & ((Face{1} << n) - 1);
      gens.push_back(f);
    }
    gens = minimal_sets(gens);
    Face V = 0;
    for (Face g : gens) V |= g;
    CAPTURE(trial);
    auto D = minimal_transversals(gens);
    CHECK(D == brute_transversals(gens, V));
    CHECK(minimal_transversals(D) == gens);
    for (Face d : D)
      for (Face g : gens) CHECK((d & g) != 0);
    // Terai
    CHECK(betti_numbers(D).regularity() == betti_numbers(gens).projdim() + 1);
    CHECK(eagon_reiner_cm(gens) == reisner_cm(gens));
  }
}

TEST_CASE("staircase duals") {
  for (int m = 2; m <= 3; ++m)
    for (int n = m; n <= 5; ++n)
      for (int l = 1; l < m; ++l) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(l);
        auto r = make_ring(m, n, false);
        auto S = staircase_ideal(r, m, n, l);
        Face V = 0;
        for (Face f : supports(S)) V |= f;
        auto C = supports(staircase_dual_closed_form(r, m, n, l));
        std::sort(C.begin(), C.end());
        CHECK(C == brute_transversals(supports(S), V));
        for (Face c : C) CHECK(std::popcount(c) == n - (m - 2));
      }
  auto r = make_ring(2, 3, false);
  CHECK(staircase_dual_closed_form(r, 2, 3, 1).size() == 4);
  CHECK_THROWS(staircase_ideal(r, 2, 3, 2));
  CHECK_THROWS(staircase_dual_closed_form(r, 3, 3, 1));
  for (auto [m, n, l] : {std::array{2, 3, 1}, {3, 4, 1}, {3, 4, 2}, {2, 4, 1}, {2, 2, 1}}) {
    auto res = run_staircase(m, n, l);
    CHECK(res.equal);
    CHECK(res.linear);
    CHECK(res.regularity == n - (m - 2));
  }
}

TEST_CASE("intersections of square-free ideals") {
  // (x) cap (y) = (xy); (x, y) cap (x, z) = (x, yz)
  CHECK(intersect_supports({x}, {y}) == std::vector<Face>{x | y});
  CHECK(intersect_supports({x, y}, {x, z}) == std::vector<Face>{x, y | z});
}

#include <algorithm>
#include <stdexcept>

#include "reescm/families.hpp"
#include "reescm/rees.hpp"

namespace reescm {

namespace {

struct MonoBuilder {
  const RingPtr& ring;
  Monomial mono;
  MonoBuilder& add(const Variable& v) {
    const auto i = ring->index_of(v);
    mono.set(i, mono.exponent(i) + 1);
    return *this;
  }
};

// Decreasing tuples a_1 > a_2 > ... > a_k from {1..hi}.
std::vector<std::vector<int>> decreasing_tuples(int hi, int k) {
  auto out = increasing_tuples(1, hi, k);
  for (auto& t : out) std::reverse(t.begin(), t.end());
  return out;
}

std::vector<Monomial> family_x(const Instance& inst, const RingPtr& ring, bool is_x) {
  std::vector<Monomial> out;
  const int s = is_x ? inst.s1 : inst.s2;
  const int t = is_x ? inst.t1 : inst.t2;
  for (const auto& a : decreasing_tuples(t, s)) {
    MonoBuilder b{ring, {}};
    for (int r = 1; r <= s; ++r) b.add(is_x ? Variable::x(r, a[r - 1]) : Variable::y(r, a[r - 1]));
    out.push_back(b.mono);
  }
  return out;
}

std::vector<Monomial> family_g(const Instance& inst, const RingPtr& ring) {
  std::vector<Monomial> out;
  for (int i = 1; i <= inst.m; ++i)
    for (int j = 1; j <= inst.n; ++j)
      for (int l = i; l <= inst.m; ++l)
        for (int k = (l == i ? j + 1 : 1); k <= inst.n; ++k)
          out.push_back(MonoBuilder{ring, {}}.add(Variable::z(i, j)).add(Variable::x(l, k)).mono);
  return out;
}

// z rows l..k on the smallest columns, then y rows s1..k+1, k-1..1, then x
// rows l-1..1, columns increasing along that list; all <= min(t1, t2).
std::vector<Monomial> family_f(const Instance& inst, const RingPtr& ring) {
  std::vector<Monomial> out;
  const int T = std::min(inst.t1, inst.t2);
  for (int k = 1; k <= inst.s2; ++k)
    for (int l = 1; l <= k; ++l)
      for (const auto& cols : increasing_tuples(1, T, inst.s1 + k - 1)) {
        MonoBuilder b{ring, {}};
        std::size_t c = 0;
        for (int r = l; r <= k; ++r) b.add(Variable::z(r, cols[c++]));
        for (int r = inst.s1; r >= 1; --r)
          if (r != k) b.add(Variable::y(r, cols[c++]));
        for (int r = l - 1; r >= 1; --r) b.add(Variable::x(r, cols[c++]));
        out.push_back(b.mono);
      }
  return out;
}

// a_1 > ... > a_s1, j the first index with a_j <= q. x rows 1..p-1 take
// a_1..a_{p-1}; row p takes a_p if j <= p, else a_j; y rows p+1..s1 take
// what is left, largest first.
std::vector<Monomial> family_u(const Instance& inst, const RingPtr& ring) {
  std::vector<Monomial> out;
  for (int p = 1; p <= inst.s1 - 1; ++p)
    for (const auto& a : decreasing_tuples(inst.t1, inst.s1))
      for (int q = 1; q <= inst.n; ++q) {
        int j = -1;
        for (int i = 0; i < inst.s1; ++i)
          if (a[i] <= q) {
            j = i;
            break;
          }
        if (j < 0) continue;
        MonoBuilder b{ring, {}};
        b.add(Variable::z(p, q));
        std::vector<int> used;
        for (int r = 1; r < p; ++r) {
          b.add(Variable::x(r, a[r - 1]));
          used.push_back(a[r - 1]);
        }
        const int xp = j <= p - 1 ? a[p - 1] : a[j];
        b.add(Variable::x(p, xp));
        used.push_back(xp);
        int r = p + 1;
        for (int c : a)
          if (std::find(used.begin(), used.end(), c) == used.end()) b.add(Variable::y(r++, c));
        out.push_back(b.mono);
      }
  return out;
}

// s1 = s2 = 2 from here on.

// z_{1q} x_{1a} y_{1 b2} y_{2 b1}, b2 < a <= b1 <= t2, a <= min(q, t1)
std::vector<Monomial> family_w(const Instance& inst, const RingPtr& ring) {
  std::vector<Monomial> out;
  for (int q = 1; q <= inst.n; ++q)
    for (int a = 1; a <= std::min(q, inst.t1); ++a)
      for (int b2 = 1; b2 < a; ++b2)
        for (int b1 = a; b1 <= inst.t2; ++b1)
          out.push_back(MonoBuilder{ring, {}}
                            .add(Variable::z(1, q))
                            .add(Variable::x(1, a))
                            .add(Variable::y(1, b2))
                            .add(Variable::y(2, b1))
                            .mono);
  return out;
}

// l = k = 1: z_{1q} y_{1 b2} y_{2 b1}, q < b2 <= t1, b2 < b1 <= t2
std::vector<Monomial> family_v(const Instance& inst, const RingPtr& ring) {
  std::vector<Monomial> out;
  for (int q = 1; q <= inst.n; ++q)
    for (int b2 = q + 1; b2 <= inst.t1; ++b2)
      for (int b1 = b2 + 1; b1 <= inst.t2; ++b1)
        out.push_back(MonoBuilder{ring, {}}
                          .add(Variable::z(1, q))
                          .add(Variable::y(1, b2))
                          .add(Variable::y(2, b1))
                          .mono);
  return out;
}

// l = k = 2: z_{1q} z_{2 q2} x_{1 a} y_{1 b}, q2 < a <= q < b <= t1; with
// `with_y2` also y_{2 b'} for b < b' <= t1.
std::vector<Monomial> family_h(const Instance& inst, const RingPtr& ring, bool with_y2) {
  std::vector<Monomial> out;
  for (int q = 1; q <= inst.n; ++q)
    for (int q2 = 1; q2 <= inst.n; ++q2)
      for (int a = q2 + 1; a <= q; ++a)
        for (int b = q + 1; b <= inst.t1; ++b) {
          MonoBuilder base{ring, {}};
          base.add(Variable::z(1, q)).add(Variable::z(2, q2)).add(Variable::x(1, a)).add(
              Variable::y(1, b));
          if (!with_y2) {
            out.push_back(base.mono);
            continue;
          }
          for (int b2 = b + 1; b2 <= inst.t1; ++b2) {
            MonoBuilder full = base;
            full.add(Variable::y(2, b2));
            out.push_back(full.mono);
          }
        }
  return out;
}

// z_{2 c1} x_{1 c3} y_{2 c2}, c1 < c2 < c3 <= min(t1, t2)
std::vector<Monomial> family_e(const Instance& inst, const RingPtr& ring) {
  std::vector<Monomial> out;
  for (const auto& c : increasing_tuples(1, std::min(inst.t1, inst.t2), 3))
    out.push_back(MonoBuilder{ring, {}}
                      .add(Variable::z(2, c[0]))
                      .add(Variable::x(1, c[2]))
                      .add(Variable::y(2, c[1]))
                      .mono);
  return out;
}

}  // namespace

std::string family_name(int number) {
  static const char* names[] = {"",    "h_X",    "h_Y", "h_g",   "h_f", "h_U",    "h_W",
                                "h_W^{p,q,l}", "h_V", "h_V^{l,k,w}", "h_H", "h_I", "h_^{k,w}I",
                                "h_E"};
  if (number < 1 || number > 13) throw std::out_of_range("family number out of range");
  return names[number];
}

std::vector<Monomial> initial_family(const Instance& inst, int number, const RingPtr& ring) {
  const bool upper = upper_families_established(inst);
  switch (number) {
    case 1: return family_x(inst, ring, true);
    case 2: return family_x(inst, ring, false);
    case 3: return family_g(inst, ring);
    case 4: return family_f(inst, ring);
    case 5: return family_u(inst, ring);
    case 6: return upper ? family_w(inst, ring) : std::vector<Monomial>{};
    case 8: return upper ? family_v(inst, ring) : std::vector<Monomial>{};
    case 10: return upper ? family_h(inst, ring, false) : std::vector<Monomial>{};
    case 11: return upper ? family_h(inst, ring, true) : std::vector<Monomial>{};
    case 13: return upper ? family_e(inst, ring) : std::vector<Monomial>{};
    case 7:
    case 9:
    case 12: return {};
  }
  throw std::out_of_range("family number out of range");
}

MonomialIdeal initial_families(const Instance& inst, const RingPtr& ring) {
  std::vector<Monomial> all;
  for (int k = 1; k <= 13; ++k) {
    auto fam = initial_family(inst, k, ring);
    all.insert(all.end(), fam.begin(), fam.end());
  }
  return MonomialIdeal(ring, std::move(all));
}

}  // namespace reescm

#include "reescm/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "reescm/matrix.hpp"
#include "reescm/rees.hpp"

namespace reescm {

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::MinorX: return "minorX";
    case FamilyTag::MinorY: return "minorY";
    case FamilyTag::G: return "g";
    case FamilyTag::F: return "f";
    case FamilyTag::FLK: return "f_lk";
    case FamilyTag::U: return "U";
    case FamilyTag::W: return "W";
    case FamilyTag::WPV: return "W_pv";
    case FamilyTag::V: return "V";
    case FamilyTag::VKW: return "V_kw";
    case FamilyTag::H: return "H";
    case FamilyTag::ILKQ: return "I_lkq";
    case FamilyTag::IKW: return "I_kw";
    case FamilyTag::E: return "E";
  }
  return "?";
}

std::optional<FamilyTag> parse_family_tag(const std::string& name) {
  for (auto t : kAllTags)
    if (to_string(t) == name) return t;
  return std::nullopt;
}

bool upper_families_established(const Instance& inst) { return inst.s1 == 2 && inst.s2 == 2; }

std::vector<std::string> assumption_flags(const Instance& inst, const FamilyOptions& opts) {
  std::vector<std::string> out;
  out.push_back("W: missing upper bound on b read as <= t2");
  out.push_back("f_lk: l <= k, columns <= min(t1,t2)");
  out.push_back("f (generators of K): rows X^{q+1,m} read as X^{q+1,s1}");
  out.push_back(opts.u_literal_second_sum ? "U: second sum over k = j+1..m, rows 1..m minus p"
                                          : "U: second sum over columns above q, rows 1..s1 minus p");
  out.push_back("U: leading x of row p sits in the largest column <= q");
  out.push_back("V: sign of the y*f summands = " + std::string(opts.v_sign > 0 ? "+" : "-") +
                " parity of the split");
  out.push_back(opts.h_literal_range ? "H: corrections over c = k..j"
                                     : "H: corrections over the columns above q");
  out.push_back("E: det[z_2; x_1; y_2] added (s1 = s2 = 2)");
  if (!upper_families_established(inst))
    out.push_back("hW through hI_kw and hE enumerated empty: form not established for s1 > 2 or s2 > 2");
  if (inst.swapped) out.push_back("X and Y exchanged to reach s1 >= s2");
  return out;
}

namespace {

enum class RowKind { X, Y, Z, D, Mixed };

struct RowSpec {
  RowKind kind;
  int row;
  int threshold = 0;  // Mixed: x for columns <= threshold, y above
};

using Rows = std::vector<RowSpec>;

void append(Rows& rows, RowKind kind, int from, int to, int threshold = 0) {
  for (int r = from; r <= to; ++r) rows.push_back({kind, r, threshold});
}

template <class K>
struct Builder {
  const Instance& inst;
  RingPtr ring;
  K field;
  using P = Polynomial<K>;

  P var(const Variable& v) const { return P::variable(ring, field, v); }
  P x(int i, int j) const { return var(Variable::x(i, j)); }
  P y(int i, int j) const { return var(Variable::y(i, j)); }
  P z(int i, int j) const { return var(Variable::z(i, j)); }
  P d(int i, int j) const { return x(i, j) - y(i, j); }
  P one() const { return P::constant(ring, field, field.one()); }

  P entry(const RowSpec& s, int col) const {
    switch (s.kind) {
      case RowKind::X: return x(s.row, col);
      case RowKind::Y: return y(s.row, col);
      case RowKind::Z: return z(s.row, col);
      case RowKind::D: return d(s.row, col);
      case RowKind::Mixed: return col <= s.threshold ? x(s.row, col) : y(s.row, col);
    }
    return P(ring, field);
  }

  P det(const Rows& rows, const std::vector<int>& cols) const {
    if (rows.size() != cols.size())
      throw std::logic_error("non-square block: " + std::to_string(rows.size()) + " rows, " +
                             std::to_string(cols.size()) + " columns");
    std::vector<std::vector<P>> grid;
    for (const auto& r : rows) {
      std::vector<P> line;
      for (int c : cols) line.push_back(entry(r, c));
      grid.push_back(std::move(line));
    }
    return PolyMatrix<K>(ring, field, std::move(grid)).determinant();
  }

  P g(int i, int j, int l, int k) const { return z(i, j) * d(l, k) - z(l, k) * d(i, j); }

  // f^{l,k} as a signed list of blocks.
  std::vector<std::pair<int, Rows>> flk_blocks(int l, int k) const {
    std::vector<std::pair<int, Rows>> out;
    for (int r = k; r <= inst.s2; ++r) {
      const int sign = (r + 1) % 2 == 0 ? 1 : -1;
      Rows a;
      append(a, RowKind::Z, l, k - 1);
      append(a, RowKind::Z, r, r);
      append(a, RowKind::X, 1, l - 1);
      append(a, RowKind::Y, 1, r - 1);
      append(a, RowKind::Y, r + 1, inst.s1);
      out.emplace_back(sign, a);
      for (int u = r + 1; u <= inst.s1; ++u) {
        Rows b;
        append(b, RowKind::Z, l, k - 1);
        append(b, RowKind::D, r, r);
        append(b, RowKind::X, 1, l - 1);
        append(b, RowKind::Y, 1, r - 1);
        append(b, RowKind::Y, r + 1, u - 1);
        append(b, RowKind::Z, u, u);
        append(b, RowKind::X, u + 1, inst.s1);
        out.emplace_back(sign, b);
      }
    }
    return out;
  }

  P flk(int l, int k, const std::vector<int>& cols) const {
    P out(ring, field);
    for (const auto& [sign, rows] : flk_blocks(l, k)) {
      P term = det(rows, cols);
      out += sign > 0 ? term : -term;
    }
    return out;
  }

  P f_generator(const std::vector<int>& cols) const {
    P out(ring, field);
    for (int q = 1; q <= inst.s2; ++q) {
      Rows rows;
      append(rows, RowKind::Z, q, q);
      append(rows, RowKind::Y, 1, q - 1);
      append(rows, RowKind::X, q + 1, inst.s1);
      P term = det(rows, cols);
      out += q % 2 == 1 ? term : -term;
    }
    return out;
  }

  P u(int p, int q, const std::vector<int>& cols, bool literal) const {
    Rows first;
    append(first, RowKind::X, 1, p - 1);
    first.push_back({RowKind::Mixed, p, q});
    append(first, RowKind::Y, p + 1, inst.s1);
    P out = z(p, q) * det(first, cols);
    const P dpq = d(p, q);
    const int last_row = literal ? inst.m : inst.s1;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] <= q) continue;
      Rows rest;
      for (int r = 1; r <= last_row; ++r)
        if (r != p) rest.push_back({RowKind::X, r});
      std::vector<int> others;
      for (std::size_t e = 0; e < cols.size(); ++e)
        if (e != c) others.push_back(cols[e]);
      P term = dpq * z(p, cols[c]) * det(rest, others);
      out += (p + static_cast<int>(c) + 1) % 2 == 0 ? term : -term;
    }
    for (int w = p + 1; w <= inst.s1; ++w) {
      Rows rows;
      append(rows, RowKind::X, 1, p - 1);
      rows.push_back({RowKind::Mixed, p, q});
      append(rows, RowKind::Y, p + 1, w - 1);
      append(rows, RowKind::Z, w, w);
      append(rows, RowKind::X, w + 1, inst.s1);
      out += dpq * det(rows, cols);
    }
    return out;
  }

  P y_minor(const std::vector<int>& cols) const {
    Rows rows;
    append(rows, RowKind::Y, 1, static_cast<int>(cols.size()));
    return det(rows, cols);
  }

  // s1 = s2 = 2, p = i = 1: z_{1q} x_{1a} |Y_{b2 b1}| - y_{1 b1} U_{1,q,(b2,a)}.
  P w(int q, int a, int b1, int b2, bool literal) const {
    return z(1, q) * x(1, a) * y_minor({b2, b1}) - y(1, b1) * u(1, q, {b2, a}, literal);
  }

  // s1 = s2 = 2, l = k = 1: z_{1q} |Y_{b2 b1}| minus the y * f^{1,1} summands
  // whose f-columns stay within min(t1, t2).
  P v(int q, int b2, int b1, int v_sign) const {
    const int T = std::min(inst.t1, inst.t2);
    P out = z(1, q) * y_minor({b2, b1});
    // split e = b1, c = b2 is the identity; e = b2, c = b1 is a transposition
    if (b2 <= T) {
      P term = y(1, b1) * flk(1, 1, {q, b2});
      out -= v_sign > 0 ? term : -term;
    }
    if (b1 <= T) {
      P term = y(1, b2) * flk(1, 1, {q, b1});
      out += v_sign > 0 ? term : -term;
    }
    return out;
  }

  // H^{l,k,q}: z_{l-1,q} f^{l,k} minus g_{l-1 q, l-1 c} times the cofactor of
  // x_{l-1,c}, for the corrected columns c.
  P h(int l, int k, int q, const std::vector<int>& cols, bool literal) const {
    P out = z(l - 1, q) * flk(l, k, cols);
    for (const auto& [sign, rows] : flk_blocks(l, k)) {
      std::size_t rp = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].kind == RowKind::X && rows[r].row == l - 1) rp = r;
      if (rp == rows.size()) continue;
      Rows minor_rows = rows;
      minor_rows.erase(minor_rows.begin() + static_cast<std::ptrdiff_t>(rp));
      // literal c = k..j counts the columns from the largest down
      const int ncols = static_cast<int>(cols.size());
      for (int c = 0; c < ncols; ++c) {
        bool corrected;
        if (literal) {
          const int label = ncols - c;
          int j = 0;
          for (int e = 0; e < ncols; ++e)
            if (cols[e] > q) ++j;
          corrected = label >= k && label <= j;
        } else {
          corrected = cols[c] > q;
        }
        if (!corrected) continue;
        std::vector<int> others;
        for (int e = 0; e < ncols; ++e)
          if (e != c) others.push_back(cols[e]);
        P term = g(l - 1, q, l - 1, cols[c]) * det(minor_rows, others);
        const bool negative = ((static_cast<int>(rp) + c) % 2 == 1) != (sign < 0);
        out += negative ? term : -term;
      }
    }
    return out;
  }

  P e(const std::vector<int>& cols) const {
    return det({{RowKind::Z, 2}, {RowKind::X, 1}, {RowKind::Y, 2}}, cols);
  }
};

}  // namespace

template <class K>
std::vector<FamilyElement<K>> family_generators(const Instance& inst, FamilyTag tag,
                                                const RingPtr& ring, const K& field,
                                                const FamilyOptions& opts) {
  Builder<K> b{inst, ring, field};
  std::vector<FamilyElement<K>> out;
  auto push = [&](std::vector<int> idx, Polynomial<K> value) {
    out.push_back({tag, std::move(idx), std::move(value)});
  };
  const int T = std::min(inst.t1, inst.t2);
  const bool upper = upper_families_established(inst);
  switch (tag) {
    case FamilyTag::MinorX:
    case FamilyTag::MinorY: {
      const bool is_x = tag == FamilyTag::MinorX;
      const int s = is_x ? inst.s1 : inst.s2;
      const int t = is_x ? inst.t1 : inst.t2;
      for (const auto& cols : increasing_tuples(1, t, s)) {
        Rows rows;
        append(rows, is_x ? RowKind::X : RowKind::Y, 1, s);
        push(cols, b.det(rows, cols));
      }
      break;
    }
    case FamilyTag::G:
      for (int i = 1; i <= inst.m; ++i)
        for (int j = 1; j <= inst.n; ++j)
          for (int l = i; l <= inst.m; ++l)
            for (int k = (l == i ? j + 1 : 1); k <= inst.n; ++k) push({i, j, l, k}, b.g(i, j, l, k));
      break;
    case FamilyTag::F:
      for (const auto& cols : increasing_tuples(1, T, inst.s1)) push(cols, b.f_generator(cols));
      break;
    case FamilyTag::FLK:
      for (int k = 1; k <= inst.s2; ++k)
        for (int l = 1; l <= k; ++l)
          for (const auto& cols : increasing_tuples(1, T, inst.s1 + k - 1)) {
            std::vector<int> idx{l, k};
            idx.insert(idx.end(), cols.begin(), cols.end());
            push(idx, b.flk(l, k, cols));
          }
      break;
    case FamilyTag::U:
      if (opts.u_literal_second_sum && inst.m != inst.s1)
        throw std::invalid_argument(
            "U: the literal second sum (rows 1..m) is not square when m != s1");
      for (int p = 1; p <= inst.s1 - 1; ++p)
        for (int q = 1; q <= inst.n; ++q)
          for (const auto& cols : increasing_tuples(1, inst.t1, inst.s1)) {
            if (cols.front() > q) continue;
            std::vector<int> idx{p, q};
            idx.insert(idx.end(), cols.begin(), cols.end());
            push(idx, b.u(p, q, cols, opts.u_literal_second_sum));
          }
      break;
    case FamilyTag::W:
      if (!upper) break;
      for (int q = 1; q <= inst.n; ++q)
        for (int a = 1; a <= std::min(q, inst.t1); ++a)
          for (int b2 = 1; b2 < a; ++b2)
            for (int b1 = a; b1 <= inst.t2; ++b1)
              push({q, a, b1, b2}, b.w(q, a, b1, b2, opts.u_literal_second_sum));
      break;
    case FamilyTag::V:
      if (!upper) break;
      for (int q = 1; q <= inst.n; ++q)
        for (int b2 = q + 1; b2 <= inst.t1; ++b2)
          for (int b1 = b2 + 1; b1 <= inst.t2; ++b1) push({q, b2, b1}, b.v(q, b2, b1, opts.v_sign));
      break;
    case FamilyTag::H:
      if (!upper) break;
      for (int q = 1; q <= inst.n; ++q)
        for (const auto& cols : increasing_tuples(1, inst.t1, 3)) {
          if (!(cols[1] <= q && q < cols[2])) continue;
          push({q, cols[0], cols[1], cols[2]}, b.h(2, 2, q, cols, opts.h_literal_range));
        }
      break;
    case FamilyTag::E:
      if (!upper) break;
      for (const auto& cols : increasing_tuples(1, T, 3)) push(cols, b.e(cols));
      break;
    case FamilyTag::WPV:
    case FamilyTag::VKW:
    case FamilyTag::ILKQ:
    case FamilyTag::IKW:
      // For s2 = 2 the recurrences only produce multiples of V, and I is
      // divisible by H; nothing new to add there.
      break;
  }
  return out;
}

template <class K>
std::vector<FamilyElement<K>> candidate_basis(const Instance& inst, const RingPtr& ring,
                                              const K& field, const FamilyOptions& opts) {
  std::vector<FamilyElement<K>> out;
  std::vector<Polynomial<K>> seen;
  for (auto tag : kAllTags)
    for (auto& el : family_generators(inst, tag, ring, field, opts)) {
      if (el.value.is_zero()) continue;
      auto normal = el.value.monic();
      if (std::find(seen.begin(), seen.end(), normal) != seen.end()) continue;
      seen.push_back(std::move(normal));
      out.push_back(std::move(el));
    }
  return out;
}

template <class K>
Polynomial<K> u_element(const Instance& inst, int p, int q, const std::vector<int>& cols,
                        const RingPtr& ring, const K& field, const FamilyOptions& opts) {
  if (p < 1 || p > inst.s1 || q < 1 || q > inst.n || static_cast<int>(cols.size()) != inst.s1 ||
      !std::is_sorted(cols.begin(), cols.end()) || cols.front() > q || cols.back() > inst.t1)
    throw std::invalid_argument("U: index tuple out of range");
  Builder<K> b{inst, ring, field};
  return b.u(p, q, cols, opts.u_literal_second_sum);
}

#define REESCM_INSTANTIATE(K)                                                                   \
  template Polynomial<K> u_element(const Instance&, int, int, const std::vector<int>&,          \
                                   const RingPtr&, const K&, const FamilyOptions&);             \
  template std::vector<FamilyElement<K>> family_generators(const Instance&, FamilyTag,          \
                                                           const RingPtr&, const K&,            \
                                                           const FamilyOptions&);               \
  template std::vector<FamilyElement<K>> candidate_basis(const Instance&, const RingPtr&,       \
                                                         const K&, const FamilyOptions&);

REESCM_INSTANTIATE(Rationals)
REESCM_INSTANTIATE(PrimeField)

}  // namespace reescm

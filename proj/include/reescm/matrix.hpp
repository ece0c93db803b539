#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "reescm/polynomial.hpp"

namespace reescm {

class NotSquare : public std::invalid_argument {
 public:
  NotSquare(std::size_t r, std::size_t c)
      : std::invalid_argument("determinant of a non-square " + std::to_string(r) + "x" +
                              std::to_string(c) + " matrix") {}
};

// Rectangular grid of polynomials. Zero-row blocks are allowed so that
// stacked block matrices with empty row ranges stay well formed.
template <class K>
class PolyMatrix {
 public:
  using Poly = Polynomial<K>;

  PolyMatrix(RingPtr ring, K field, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), field_(std::move(field)), rows_(rows), cols_(cols) {
    entries_.assign(rows * cols, Poly(ring_, field_));
  }
  PolyMatrix(RingPtr ring, K field, std::vector<std::vector<Poly>> grid)
      : ring_(std::move(ring)), field_(std::move(field)), rows_(grid.size()),
        cols_(grid.empty() ? 0 : grid.front().size()) {
    entries_.reserve(rows_ * cols_);
    for (auto& row : grid) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      for (auto& e : row) entries_.push_back(std::move(e));
    }
  }

  // Matrix of variables of one family with rows first_row..last_row (1-based,
  // inclusive; empty when last_row < first_row) and the given 1-based columns.
  static PolyMatrix of_variables(RingPtr ring, K field, VariableFamily family, int first_row,
                                 int last_row, const std::vector<int>& cols) {
    std::size_t r = last_row >= first_row ? static_cast<std::size_t>(last_row - first_row + 1) : 0;
    PolyMatrix mat(ring, field, r, cols.size());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        mat.at(i, j) = Poly::variable(ring, field,
                                      Variable{family, first_row + static_cast<int>(i), cols[j]});
    return mat;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  Poly& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

  // Rows and columns are 0-based; the given order is kept.
  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const {
    PolyMatrix out(ring_, field_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] >= rows_) throw std::out_of_range("row index out of range");
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw std::out_of_range("column index out of range");
        out.at(i, j) = at(rows[i], cols[j]);
      }
    }
    return out;
  }

  // Blocks placed top to bottom; all blocks must share the column count.
  static PolyMatrix vstack(const std::vector<PolyMatrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("vstack of no blocks");
    const std::size_t c = blocks.front().cols_;
    std::size_t r = 0;
    for (const auto& b : blocks) {
      if (b.cols_ != c) throw std::invalid_argument("vstack column mismatch");
      r += b.rows_;
    }
    PolyMatrix out(blocks.front().ring_, blocks.front().field_, r, c);
    std::size_t row = 0;
    for (const auto& b : blocks)
      for (std::size_t i = 0; i < b.rows_; ++i, ++row)
        for (std::size_t j = 0; j < c; ++j) out.at(row, j) = b.at(i, j);
    return out;
  }

  PolyMatrix operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= o.entries_[i];
    return out;
  }

  // Laplace expansion over column subsets, bottom row upwards; exact.
  // The determinant of a 0x0 matrix is 1.
  Poly determinant() const {
    if (rows_ != cols_) throw NotSquare(rows_, cols_);
    const std::size_t n = rows_;
    if (n == 0) return Poly::constant(ring_, field_, field_.one());
    if (n > 24) throw std::invalid_argument("determinant size too large for expansion");
    // minors[mask] = det of rows (n - popcount(mask))..n-1 on the columns in mask.
    std::unordered_map<std::uint32_t, Poly> minors;
    for (std::size_t c = 0; c < n; ++c) minors.emplace(std::uint32_t{1} << c, at(n - 1, c));
    for (std::size_t k = 2; k <= n; ++k) {
      const std::size_t row = n - k;
      std::unordered_map<std::uint32_t, Poly> next;
      for (const auto& [mask, sub] : minors) {
        if (sub.is_zero()) continue;
        // Add one column c not in mask; its sign is the position of c in mask|c.
        for (std::size_t c = 0; c < n; ++c) {
          const std::uint32_t bit = std::uint32_t{1} << c;
          if (mask & bit) continue;
          const auto& entry = at(row, c);
          if (entry.is_zero()) continue;
          const int position = std::popcount(mask & (bit - 1));
          Poly term = entry * sub;
          if (position % 2) term = -term;
          auto it = next.find(mask | bit);
          if (it == next.end())
            next.emplace(mask | bit, std::move(term));
          else
            it->second += term;
        }
      }
      minors = std::move(next);
    }
    auto it = minors.find((std::uint32_t{1} << n) - 1);
    if (it == minors.end()) return Poly(ring_, field_);
    return it->second;
  }

 private:
  RingPtr ring_;
  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

}  // namespace reescm

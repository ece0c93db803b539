#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reescm {

enum class VariableFamily { T, Z, X, Y };

// An indexed variable x[i,j], y[i,j], z[i,j] (1-based) or the auxiliary t.
struct Variable {
  VariableFamily family = VariableFamily::X;
  int row = 0;
  int col = 0;

  static Variable x(int i, int j) { return {VariableFamily::X, i, j}; }
  static Variable y(int i, int j) { return {VariableFamily::Y, i, j}; }
  static Variable z(int i, int j) { return {VariableFamily::Z, i, j}; }
  static Variable t() { return {VariableFamily::T, 0, 0}; }

  bool operator==(const Variable&) const = default;
};

std::string to_string(const Variable& v);
std::optional<Variable> parse_variable(std::string_view text);

// Fixed enumeration of the variables of k[t, Z, X, Y] for an m x n instance.
//
// Position 0 is the largest variable. The enumeration realizes the
// lexicographic order used throughout: t above everything, then
// z[1,1] > z[1,2] > ... > z[m,n], then x[1,n] > x[1,n-1] > ... > x[1,1] >
// x[2,n] > ... > x[m,1], then the y variables arranged like the x ones.
// Lex on exponent vectors stored in this order is the block-lex order, and
// since t comes first it is simultaneously the elimination order for t.
class Ring {
 public:
  static constexpr std::size_t kMaxVariables = 64;

  Ring(int m, int n, bool with_aux = true);

  int rows() const { return m_; }
  int cols() const { return n_; }
  bool has_aux() const { return with_aux_; }
  std::size_t size() const { return vars_.size(); }

  const Variable& variable(std::size_t index) const { return vars_.at(index); }
  const std::vector<Variable>& variables() const { return vars_; }

  // Throws std::out_of_range for variables outside the instance.
  std::size_t index_of(const Variable& v) const;
  std::optional<std::size_t> find(const Variable& v) const;

  std::string name(std::size_t index) const { return to_string(vars_.at(index)); }

 private:
  int m_;
  int n_;
  bool with_aux_;
  std::vector<Variable> vars_;
  std::size_t z_base_ = 0;
  std::size_t x_base_ = 0;
  std::size_t y_base_ = 0;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(int m, int n, bool with_aux = true) {
  return std::make_shared<const Ring>(m, n, with_aux);
}

}  // namespace reescm

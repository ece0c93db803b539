#include "reescm/ring.hpp"

#include <charconv>
#include <stdexcept>

namespace reescm {

std::string to_string(const Variable& v) {
  switch (v.family) {
    case VariableFamily::T:
      return "t";
    case VariableFamily::Z:
      return "z[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    case VariableFamily::X:
      return "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    case VariableFamily::Y:
      return "y[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
  }
  return "?";
}

std::optional<Variable> parse_variable(std::string_view text) {
  if (text == "t") return Variable::t();
  if (text.size() < 6 || text[1] != '[' || text.back() != ']') return std::nullopt;
  VariableFamily family;
  switch (text[0]) {
    case 'x':
      family = VariableFamily::X;
      break;
    case 'y':
      family = VariableFamily::Y;
      break;
    case 'z':
      family = VariableFamily::Z;
      break;
    default:
      return std::nullopt;
  }
  std::string_view body = text.substr(2, text.size() - 3);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  int row = 0;
  int col = 0;
  auto r1 = std::from_chars(body.data(), body.data() + comma, row);
  auto r2 = std::from_chars(body.data() + comma + 1, body.data() + body.size(), col);
  if (r1.ec != std::errc() || r1.ptr != body.data() + comma) return std::nullopt;
  if (r2.ec != std::errc() || r2.ptr != body.data() + body.size()) return std::nullopt;
  if (row < 1 || col < 1) return std::nullopt;
  return Variable{family, row, col};
}

Ring::Ring(int m, int n, bool with_aux) : m_(m), n_(n), with_aux_(with_aux) {
  if (m < 1 || n < 1) throw std::invalid_argument("ring dimensions must be positive");
  std::size_t total = 3 * static_cast<std::size_t>(m) * n + (with_aux ? 1 : 0);
  if (total > kMaxVariables) {
    throw std::invalid_argument("ring needs " + std::to_string(total) + " variables; at most " +
                                std::to_string(kMaxVariables) + " are supported");
  }
  vars_.reserve(total);
  if (with_aux) vars_.push_back(Variable::t());
  z_base_ = vars_.size();
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) vars_.push_back(Variable::z(i, j));
  x_base_ = vars_.size();
  for (int i = 1; i <= m; ++i)
    for (int j = n; j >= 1; --j) vars_.push_back(Variable::x(i, j));
  y_base_ = vars_.size();
  for (int i = 1; i <= m; ++i)
    for (int j = n; j >= 1; --j) vars_.push_back(Variable::y(i, j));
}

std::optional<std::size_t> Ring::find(const Variable& v) const {
  if (v.family == VariableFamily::T) {
    if (!with_aux_) return std::nullopt;
    return 0;
  }
  if (v.row < 1 || v.row > m_ || v.col < 1 || v.col > n_) return std::nullopt;
  const auto row_offset = static_cast<std::size_t>(v.row - 1) * n_;
  switch (v.family) {
    case VariableFamily::Z:
      return z_base_ + row_offset + (v.col - 1);
    case VariableFamily::X:
      return x_base_ + row_offset + (n_ - v.col);
    case VariableFamily::Y:
      return y_base_ + row_offset + (n_ - v.col);
    case VariableFamily::T:
      break;
  }
  return std::nullopt;
}

std::size_t Ring::index_of(const Variable& v) const {
  auto idx = find(v);
  if (!idx) throw std::out_of_range("variable " + to_string(v) + " is not in the ring");
  return *idx;
}

}  // namespace reescm

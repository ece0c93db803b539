#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "reescm/ring.hpp"

namespace reescm {

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix sizes (m, n) and the two minor specifications: the s1-minors of the
// first s1 rows and t1 columns of X, the s2-minors of the leading s2 x t2
// block of Y.
struct Instance {
  int m = 2;
  int n = 2;
  int s1 = 2;
  int t1 = 2;
  int s2 = 2;
  int t2 = 2;
  // The instance as typed, before normalization.
  int input[6] = {2, 2, 2, 2, 2, 2};
  bool swapped = false;
  std::vector<std::string> notices;

  RingPtr ring(bool with_aux = true) const { return make_ring(m, n, with_aux); }
  std::string label() const;
  // mn - 1 + t1 - (s1 - 1) + t2 - (s2 - 1)
  int dual_degree() const { return m * n - 1 + t1 - (s1 - 1) + t2 - (s2 - 1); }
  // 1 + mm - 1 + t2 - (s2 - 1), the variant computed at the start of the
  // regularity proof, read with mm as m*m.
  int dual_degree_variant() const { return 1 + m * m - 1 + t2 - (s2 - 1); }
  bool operator==(const Instance& o) const {
    return m == o.m && n == o.n && s1 == o.s1 && t1 == o.t1 && s2 == o.s2 && t2 == o.t2;
  }
};

// Validates 2 <= m <= n, 2 <= s_i <= t_i <= n, s_i <= m and normalizes so
// that s1 >= s2, and t1 <= t2 when s1 == s2, by exchanging the roles of X and
// Y. Each exchange is recorded in `notices`.
Instance build_instance(int m, int n, int s1, int t1, int s2, int t2);

}  // namespace reescm

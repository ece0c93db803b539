#include "reescm/instance.hpp"

#include <utility>

namespace reescm {

std::string Instance::label() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(s1) + "," +
         std::to_string(t1) + "," + std::to_string(s2) + "," + std::to_string(t2) + ")";
}

Instance build_instance(int m, int n, int s1, int t1, int s2, int t2) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw InvalidInstance("invalid instance: " + what + " violated");
  };
  require(2 <= m, "2 <= m");
  require(m <= n, "m <= n");
  require(2 <= s1, "2 <= s1");
  require(s1 <= t1, "s1 <= t1");
  require(t1 <= n, "t1 <= n");
  require(2 <= s2, "2 <= s2");
  require(s2 <= t2, "s2 <= t2");
  require(t2 <= n, "t2 <= n");
  require(s1 <= m, "s1 <= m");
  require(s2 <= m, "s2 <= m");
  require(3 * m * n + 1 <= static_cast<int>(Ring::kMaxVariables),
          "3mn + 1 <= " + std::to_string(Ring::kMaxVariables));

  Instance inst;
  inst.m = m;
  inst.n = n;
  inst.s1 = s1;
  inst.t1 = t1;
  inst.s2 = s2;
  inst.t2 = t2;
  int raw[6] = {m, n, s1, t1, s2, t2};
  std::copy(raw, raw + 6, inst.input);
  if (s1 < s2 || (s1 == s2 && t1 > t2)) {
    std::swap(inst.s1, inst.s2);
    std::swap(inst.t1, inst.t2);
    inst.swapped = true;
    std::string from = "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                       std::to_string(s1) + "," + std::to_string(t1) + "," +
                       std::to_string(s2) + "," + std::to_string(t2) + ")";
    inst.notices.push_back(
        "instance " + from + " normalized to " + inst.label() +
        " by exchanging X and Y (z -> -z); the Rees algebras are isomorphic" +
        (s1 < s2 ? " (s1 < s2)" : " (s1 = s2, t1 > t2)"));
  }
  if (inst.s1 == inst.s2) inst.notices.push_back("s1 = s2: accepted and flagged");
  return inst;
}

}  // namespace reescm

#include "graphoid/oracle.hpp"

#include <string>

#include "graphoid/errors.hpp"

namespace graphoid {

DependencyModel induced_model(const IndependenceOracle& oracle, int max_vars) {
  const Universe& u = oracle.universe();
  const int n = u.size();
  if (n > max_vars)
    throw CapacityError("induced_model: universe size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(max_vars));

  DependencyModel out(u);
  // Assign each variable to one of {X, Y, Z, out}; keep canonical
  // representatives of nontrivial triplets.
  std::vector<int> slot(n, 0);
  while (true) {
    Triplet t;
    for (int v = 0; v < n; ++v) {
      if (slot[v] == 1) t.X.insert(v);
      else if (slot[v] == 2) t.Y.insert(v);
      else if (slot[v] == 3) t.Z.insert(v);
    }
    if (!t.trivial() && normalize(t) == t && oracle.contains(t)) out.add(t);
    int i = 0;
    while (i < n && slot[i] == 3) slot[i++] = 0;
    if (i == n) break;
    ++slot[i];
  }
  out.set_closed_flag(is_closed(out).closed);
  return out;
}

}  // namespace graphoid

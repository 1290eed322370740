#ifndef GRAPHOID_TESTS_HELPERS_HPP
#define GRAPHOID_TESTS_HELPERS_HPP

// Test-only oracles, deliberately implemented on different code paths than
// the library: division-based independence, generate-and-test closure, and
// all-orderings disconnectedness. Expected values in the test suites are
// frozen from these.

#include <algorithm>
#include <map>
#include <vector>

#include "graphoid/dependency_model.hpp"
#include "graphoid/network.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/rational.hpp"
#include "graphoid/tabular.hpp"

namespace graphoid::testing {

// Eq.-1 independence decided with explicit division: for every z with
// P(z) > 0, compare the conditional joint against the product of the
// conditional marginals.
inline bool naive_independent(const TabularDistribution& p, VarSet X, VarSet Y,
                              VarSet Z) {
  const std::vector<VariableId> xv = X.members(), yv = Y.members(),
                                zv = Z.members();
  auto key = [](const std::vector<int>& values,
                const std::vector<VariableId>& vars) {
    std::vector<int> k;
    for (VariableId v : vars) k.push_back(values[v]);
    return k;
  };
  std::map<std::vector<int>, Rational> pz, pxz, pyz, pxyz;
  for (std::size_t idx = 0; idx < p.cell_count(); ++idx) {
    const std::vector<int> values = p.values_at(idx);
    const Rational& c = p.cells()[idx];
    pz[key(values, zv)] += c;
    auto xz = key(values, xv), yz = key(values, yv);
    auto xyz = xz;
    xyz.insert(xyz.end(), yz.begin(), yz.end());
    auto zk = key(values, zv);
    xz.insert(xz.end(), zk.begin(), zk.end());
    yz.insert(yz.end(), zk.begin(), zk.end());
    xyz.insert(xyz.end(), zk.begin(), zk.end());
    pxz[xz] += c;
    pyz[yz] += c;
    pxyz[xyz] += c;
  }
  for (const auto& [xyzk, pj] : pxyz) {
    std::vector<int> xk(xyzk.begin(), xyzk.begin() + xv.size());
    std::vector<int> yk(xyzk.begin() + xv.size(),
                        xyzk.begin() + xv.size() + yv.size());
    std::vector<int> zk(xyzk.begin() + xv.size() + yv.size(), xyzk.end());
    const Rational mass = pz.at(zk);
    if (mass == 0) continue;
    std::vector<int> xzk = xk, yzk = yk;
    xzk.insert(xzk.end(), zk.begin(), zk.end());
    yzk.insert(yzk.end(), zk.begin(), zk.end());
    const Rational lhs = pj / mass;
    const Rational rhs = (pxz.at(xzk) / mass) * (pyz.at(yzk) / mass);
    if (lhs != rhs) return false;
  }
  return true;
}

// Generate-and-test closure: scan every candidate triplet and every single
// axiom application until nothing new is derivable. A slow independent
// implementation of the worklist engine.
inline DependencyModel naive_close(const DependencyModel& m) {
  DependencyModel s = m;
  const int n = s.universe().size();
  const VarSet all = s.universe().all();

  auto derivable = [&](const Triplet& t) {
    const VarSet sides[2][2] = {{t.X, t.Y}, {t.Y, t.X}};
    for (const auto& side : sides) {
      const VarSet P = side[0], Q = side[1];
      // decomposition: from (P, Q+W; Z)
      bool found = false;
      for_each_subset(all - (P | Q | t.Z), [&](VarSet W) {
        if (!W.empty() && s.contains(P, Q | W, t.Z)) found = true;
      });
      if (found) return true;
      // weak union: from (P, Q+W; Z-W) with W inside Z
      for_each_subset(t.Z, [&](VarSet W) {
        if (!W.empty() && s.contains(P, Q | W, t.Z - W)) found = true;
      });
      if (found) return true;
      // contraction: split Q into nonempty Yc, Wc with both premises held
      for_each_subset(Q, [&](VarSet Yc) {
        const VarSet Wc = Q - Yc;
        if (!Yc.empty() && !Wc.empty() && s.contains(P, Yc, t.Z) &&
            s.contains(P, Wc, t.Z | Yc))
          found = true;
      });
      if (found) return true;
    }
    return false;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> slot(n, 0);
    while (true) {
      Triplet t;
      for (int v = 0; v < n; ++v) {
        if (slot[v] == 1) t.X.insert(v);
        else if (slot[v] == 2) t.Y.insert(v);
        else if (slot[v] == 3) t.Z.insert(v);
      }
      if (!t.trivial() && normalize(t) == t && !s.contains(t) && derivable(t)) {
        s.add(t);
        changed = true;
      }
      int i = 0;
      while (i < n && slot[i] == 3) slot[i++] = 0;
      if (i == n) break;
      ++slot[i];
    }
  }
  s.set_closed_flag(true);
  return s;
}

inline bool same_statements(const DependencyModel& a,
                            const DependencyModel& b) {
  const auto sa = a.statements(), sb = b.statements();
  if (sa.size() != sb.size()) return false;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (!(sa[i] == sb[i])) return false;
  return true;
}

// Disconnectedness by the definition: disconnected in every belief network
// representation. Only usable at tiny n (enumerates all n! orderings).
inline bool disconnected_all_orderings(const IndependenceOracle& oracle,
                                       VariableId a, VariableId b) {
  const int n = oracle.universe().size();
  std::vector<VariableId> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  bool in_every = true;
  do {
    const BeliefNetwork net = build(oracle, perm);
    for (const VarSet& comp : connected_components(net))
      if (comp.contains(a) && comp.contains(b)) in_every = false;
  } while (in_every && std::next_permutation(perm.begin(), perm.end()));
  return in_every;
}

// The seed model with one two-block statement over {a,b,c,d}.
inline DependencyModel two_block_seed() {
  DependencyModel m{Universe({"a", "b", "c", "d"})};
  m.add(VarSet::of({0, 1}), VarSet::of({2, 3}), VarSet{});
  return m;
}

}  // namespace graphoid::testing

#endif  // GRAPHOID_TESTS_HELPERS_HPP

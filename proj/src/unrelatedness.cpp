#include "graphoid/unrelatedness.hpp"

#include <string>

#include "graphoid/errors.hpp"

namespace graphoid {

bool totally_independent_pair(const IndependenceOracle& oracle, VariableId a,
                              VariableId b) {
  if (a == b) throw DomainError("pair requires two distinct variables");
  return totally_independent_sets(oracle, VarSet::single(a),
                                  VarSet::single(b));
}

bool totally_independent_sets(const IndependenceOracle& oracle, VarSet A,
                              VarSet B) {
  require_disjoint(A, B, VarSet{});
  if (A.empty() || B.empty())
    throw DomainError("total independence requires nonempty sets");
  const VarSet rest = oracle.universe().all() - A - B;
  for (VarSet Z : subsets_by_cardinality(rest))
    if (!oracle.contains(A, B, Z)) return false;
  return true;
}

UncoupledResult totally_uncoupled_sets(const IndependenceOracle& oracle,
                                       VarSet A, VarSet B, int max_vars) {
  require_disjoint(A, B, VarSet{});
  if (A.empty() || B.empty())
    throw DomainError("total uncoupledness requires nonempty sets");
  const Universe& u = oracle.universe();
  if (u.size() > max_vars)
    throw CapacityError("uncoupledness scan: universe size " +
                        std::to_string(u.size()) + " exceeds cap " +
                        std::to_string(max_vars));
  const VarSet free = u.all() - A - B;
  UncoupledResult result;
  // Partitions enumerated by the bitmask value of U1's free part, so the
  // first witness is reproducible.
  for_each_subset(free, [&](VarSet s) {
    if (result.uncoupled) return;
    const VarSet u1 = A | s;
    const VarSet u2 = u.all() - u1;
    if (oracle.contains(u1, u2, VarSet{}))
      result = UncoupledResult{true, u1, u2};
  });
  return result;
}

UncoupledResult totally_uncoupled_pair(const IndependenceOracle& oracle,
                                       VariableId a, VariableId b,
                                       int max_vars) {
  if (a == b) throw DomainError("pair requires two distinct variables");
  return totally_uncoupled_sets(oracle, VarSet::single(a), VarSet::single(b),
                                max_vars);
}

DisconnectedResult totally_disconnected_pair(const IndependenceOracle& oracle,
                                             VariableId a, VariableId b) {
  if (a == b) throw DomainError("pair requires two distinct variables");
  // One representation suffices for graphoid oracles; the ordering places a
  // first and b second, the rest in universe order.
  std::vector<VariableId> ordering{a, b};
  for (int v = 0; v < oracle.universe().size(); ++v)
    if (v != a && v != b) ordering.push_back(v);

  DisconnectedResult result;
  result.network = build(oracle, ordering);
  for (const VarSet& comp : connected_components(result.network))
    if (comp.contains(a)) {
      result.disconnected = !comp.contains(b);
      break;
    }
  return result;
}

PairVerdict analyze_pair(const IndependenceOracle& oracle, VariableId a,
                         VariableId b, int max_vars) {
  PairVerdict v;
  v.a = a;
  v.b = b;
  v.totally_independent = totally_independent_pair(oracle, a, b);
  v.interact = !v.totally_independent;

  const UncoupledResult uc = totally_uncoupled_pair(oracle, a, b, max_vars);
  v.totally_uncoupled = uc.uncoupled;
  v.witness_U1 = uc.U1;
  v.witness_U2 = uc.U2;

  DisconnectedResult dc = totally_disconnected_pair(oracle, a, b);
  v.totally_disconnected = dc.disconnected;
  v.network = std::move(dc.network);

  // Both hold for graphoid oracles; a mismatch means the oracle is not a
  // graphoid (e.g. an unclosed model) or the library is broken.
  if (v.totally_uncoupled != v.totally_disconnected)
    throw Error("uncoupledness and disconnectedness disagree; the oracle "
                "is not a graphoid");
  if (v.totally_uncoupled && !v.totally_independent)
    throw Error("uncoupled pair is not totally independent; the oracle is "
                "not a graphoid");
  return v;
}

namespace {

std::vector<bool> interact_matrix(const IndependenceOracle& oracle) {
  const int n = oracle.universe().size();
  std::vector<bool> interact(n * n, false);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const bool i = !totally_independent_pair(oracle, a, b);
      interact[a * n + b] = i;
      interact[b * n + a] = i;
    }
  return interact;
}

}  // namespace

TransitivityReport is_transitive(const IndependenceOracle& oracle) {
  const int n = oracle.universe().size();
  const std::vector<bool> interact = interact_matrix(oracle);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (interact[a * n + b] && interact[b * n + c] &&
            !interact[a * n + c])
          return TransitivityReport{false, std::array<VariableId, 3>{a, b, c}};
      }
    }
  return TransitivityReport{true, std::nullopt};
}

SeparabilityReport is_separable(const IndependenceOracle& oracle,
                                int max_vars) {
  const int n = oracle.universe().size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!totally_independent_pair(oracle, a, b)) continue;
      if (!totally_uncoupled_pair(oracle, a, b, max_vars).uncoupled)
        return SeparabilityReport{false, std::pair<VariableId, VariableId>{a, b}};
    }
  return SeparabilityReport{true, std::nullopt};
}

}  // namespace graphoid

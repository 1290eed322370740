#ifndef GRAPHOID_UNRELATEDNESS_HPP
#define GRAPHOID_UNRELATEDNESS_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "graphoid/network.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

inline constexpr int kDefaultUncoupledCap = 12;  // 2^(n-2) partition scan

// The oracles handed to these routines are assumed to be graphoids
// (closed models or distribution-backed); the disconnectedness shortcut
// and the verdict cross-checks rely on it.

// (a,b;Z) holds for every subset Z of U \ {a,b}. Z subsets are scanned in
// cardinality-then-lexicographic order.
bool totally_independent_pair(const IndependenceOracle& oracle, VariableId a,
                              VariableId b);

// (A,B;Z) holds for every Z subset of U \ (A+B). A, B disjoint, nonempty.
bool totally_independent_sets(const IndependenceOracle& oracle, VarSet A,
                              VarSet B);

struct UncoupledResult {
  bool uncoupled = false;
  VarSet U1, U2;  // witnessing partition when uncoupled
};

// Brute-force partition scan: some partition U1 + U2 = U with a in U1,
// b in U2 has (U1,U2;0) a member. Partitions are enumerated by the bitmask
// value of U1's free part, so the witness is reproducible. Throws
// CapacityError above max_vars.
UncoupledResult totally_uncoupled_pair(const IndependenceOracle& oracle,
                                       VariableId a, VariableId b,
                                       int max_vars = kDefaultUncoupledCap);

// Set extension of uncoupledness: U1 contains A, U2 contains B.
UncoupledResult totally_uncoupled_sets(const IndependenceOracle& oracle,
                                       VarSet A, VarSet B,
                                       int max_vars = kDefaultUncoupledCap);

struct DisconnectedResult {
  bool disconnected = false;
  BeliefNetwork network;  // the single representation examined
};

// Builds one network under the ordering (a, b, rest in universe order) and
// reports whether a and b fall in different connected components. One
// representation decides disconnectedness for graphoid oracles.
DisconnectedResult totally_disconnected_pair(const IndependenceOracle& oracle,
                                             VariableId a, VariableId b);

struct PairVerdict {
  VariableId a = 0, b = 0;
  bool totally_independent = false;
  bool interact = false;  // negation of totally_independent
  bool totally_uncoupled = false;
  VarSet witness_U1, witness_U2;
  bool totally_disconnected = false;
  BeliefNetwork network;
};

// Computes all verdicts for a pair; verifies uncoupledness and
// disconnectedness agree (they must on graphoid oracles) and that
// uncoupledness implies total independence.
PairVerdict analyze_pair(const IndependenceOracle& oracle, VariableId a,
                         VariableId b, int max_vars = kDefaultUncoupledCap);

struct TransitivityReport {
  bool transitive = false;
  // First ordered triple (a,b,c), in lexicographic index order, with
  // interact(a,b) and interact(b,c) but not interact(a,c).
  std::optional<std::array<VariableId, 3>> counterexample;
};

TransitivityReport is_transitive(const IndependenceOracle& oracle);

struct SeparabilityReport {
  bool separable = false;
  // First pair (in index order) that is totally independent yet coupled.
  std::optional<std::pair<VariableId, VariableId>> counterexample;
};

SeparabilityReport is_separable(const IndependenceOracle& oracle,
                                int max_vars = kDefaultUncoupledCap);

}  // namespace graphoid

#endif  // GRAPHOID_UNRELATEDNESS_HPP

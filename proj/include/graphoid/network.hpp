#ifndef GRAPHOID_NETWORK_HPP
#define GRAPHOID_NETWORK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "graphoid/oracle.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

inline constexpr long long kDefaultTrailCap = 1'000'000;

// DAG built from an ordering by giving each variable a minimal predecessor
// set that renders it independent of its remaining predecessors. Acyclic by
// construction: parents precede children in the ordering.
struct BeliefNetwork {
  Universe universe;
  std::vector<VariableId> ordering;  // permutation of the universe
  std::vector<VarSet> parents;       // indexed by VariableId

  VarSet children_of(VariableId v) const;
  int edge_count() const;
  // Edges as (parent, child), sorted by child then parent.
  std::vector<std::pair<VariableId, VariableId>> edges() const;
};

// First subset of `predecessors` (cardinality-then-lexicographic order) that
// makes (u, predecessors \ pi; pi) a member of the oracle. pi = predecessors
// always satisfies the condition, so the search cannot fail.
VarSet minimal_parents(const IndependenceOracle& oracle, VariableId u,
                       VarSet predecessors);

// Every minimum-cardinality subset satisfying the condition, in
// lexicographic order; an audit surface for tie-breaking.
std::vector<VarSet> minimal_parents_all(const IndependenceOracle& oracle,
                                        VariableId u, VarSet predecessors);

// Applies minimal_parents at each position of the ordering. Throws
// InputError when the ordering is not a permutation of the universe.
BeliefNetwork build(const IndependenceOracle& oracle,
                    const std::vector<VariableId>& ordering);

// True iff no trail between X and Y is active by Z. Linear-time
// reachability over (node, entry-direction) states.
bool d_separated(const BeliefNetwork& net, VarSet X, VarSet Y, VarSet Z);

// An undirected path through the DAG: nodes[i] -- nodes[i+1] along an edge
// whose direction is forward[i] (true: nodes[i] -> nodes[i+1]).
struct Trail {
  std::vector<VariableId> nodes;
  std::vector<bool> forward;

  std::string to_string(const Universe& u) const;
};

// All edge-simple trails between X and Y that are active by Z, in
// deterministic DFS order; empty iff d_separated. The naive oracle kept for
// testing the reachability algorithm. Throws CapacityError when the DFS
// explores more than `cap` extensions. With max_trails >= 0 stops after
// that many active trails (emptiness checks use max_trails = 1).
std::vector<Trail> enumerate_active_trails(const BeliefNetwork& net, VarSet X,
                                           VarSet Y, VarSet Z,
                                           long long cap = kDefaultTrailCap,
                                           long long max_trails = -1);

// Maximal connected components of the underlying undirected graph, sorted
// by least member.
std::vector<VarSet> connected_components(const BeliefNetwork& net);

// Valid DOT digraph; nodes in universe order, edges sorted by child then
// parent.
std::string export_dot(const BeliefNetwork& net,
                       const std::string& graph_name = "G");

}  // namespace graphoid

#endif  // GRAPHOID_NETWORK_HPP

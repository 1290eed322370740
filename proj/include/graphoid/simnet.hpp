#ifndef GRAPHOID_SIMNET_HPP
#define GRAPHOID_SIMNET_HPP

#include <string>
#include <utility>
#include <vector>

#include "graphoid/network.hpp"
#include "graphoid/tabular.hpp"

namespace graphoid {

// Connected undirected graph over the values of a distinguished hypothesis
// variable; each edge pairs two values that are hard to tell apart.
struct SimilarityGraph {
  std::string hypothesis;
  std::vector<std::string> values;
  std::vector<std::pair<int, int>> edges;  // value-index pairs, i < j

  // Throws InputError if the graph is not connected over `values`.
  void validate() const;
};

// Belief network for one similarity edge, built from the distribution
// conditioned on the hypothesis taking one of the edge's two values.
struct LocalNetwork {
  std::pair<int, int> edge;  // hypothesis value indices it covers
  VariableId hypothesis = 0;
  BeliefNetwork net;
};

// Union over the local networks of the links (and their adjacent nodes)
// inside the connected component of the hypothesis node.
struct GlobalNetwork {
  Universe universe;
  VariableId hypothesis = 0;
  VarSet nodes;
  std::vector<std::pair<VariableId, VariableId>> edges;  // parent -> child
};

// Conditions p on h in {edge.first, edge.second} (domain restriction +
// renormalization) and builds the network under `ordering`, which must put
// h first and then the shared symptom order. Throws ZeroEvidenceError when
// the restriction has zero mass, InputError on a bad ordering.
LocalNetwork build_local(const TabularDistribution& p, VariableId h,
                         std::pair<int, int> edge,
                         const std::vector<VariableId>& ordering);

// Connected component of the hypothesis in the local network, minus the
// hypothesis itself.
VarSet relevant_symptoms(const LocalNetwork& ln);

struct DiscriminationResult {
  // Direct route: P(s | h=h_i, Z=z) differs from P(s | h=h_j, Z=z) for some
  // symptom set Z and values z giving both conditioning events positive
  // mass.
  bool by_probability = false;
  // Independence route: s and h are not totally independent in the model
  // conditioned on h in {h_i, h_j}.
  bool by_independence = false;

  bool agree() const { return by_probability == by_independence; }
  explicit operator bool() const { return by_probability; }
};

// Both routes are computed over the full exhaustive Z scan so they can be
// compared. Throws CapacityError for universes too large to scan.
DiscriminationResult discriminates(const TabularDistribution& p, VariableId s,
                                   VariableId h, int h_i, int h_j,
                                   int max_vars = 12);

// Requires all locals to share the ordering (InputError otherwise); the
// shared ordering guarantees the union is acyclic.
GlobalNetwork compose_global(const std::vector<LocalNetwork>& locals);

std::string export_dot(const GlobalNetwork& g,
                       const std::string& graph_name = "similarity");

}  // namespace graphoid

#endif  // GRAPHOID_SIMNET_HPP

#ifndef GRAPHOID_JSON_IO_HPP
#define GRAPHOID_JSON_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "graphoid/dependency_model.hpp"
#include "graphoid/gaussian.hpp"
#include "graphoid/network.hpp"
#include "graphoid/simnet.hpp"
#include "graphoid/tabular.hpp"
#include "graphoid/unrelatedness.hpp"

namespace graphoid {

// Dependency model:
//   {"variables":["a","b"],"statements":[{"X":["a"],"Y":["b"],"Z":[]}]}
nlohmann::json model_to_json(const DependencyModel& m);
DependencyModel model_from_json(const nlohmann::json& j);

// Tabular distribution:
//   {"type":"tabular","variables":[{"name":"a","domain":["0","1"]}],
//    "cells":[{"assign":{"a":"0"},"p":"1/2"}, ...]}
// Cells must cover the full product space exactly once.
nlohmann::json tabular_to_json(const TabularDistribution& p);
TabularDistribution tabular_from_json(const nlohmann::json& j);

// Gaussian model:
//   {"type":"gaussian","variables":["x1"],"mean":[0.0],
//    "covariance":[[1.0]],"tolerance":1e-9}
nlohmann::json gaussian_to_json(const GaussianModel& g);
GaussianModel gaussian_from_json(const nlohmann::json& j);

// Either distribution kind, dispatched on "type".
struct LoadedDistribution {
  std::shared_ptr<const TabularDistribution> tabular;  // one of the two set
  std::shared_ptr<const GaussianModel> gaussian;
};
LoadedDistribution distribution_from_json(const nlohmann::json& j);

// Belief network:
//   {"variables":[...],"ordering":[...],"parents":{"d":["c"], ...}}
nlohmann::json network_to_json(const BeliefNetwork& net);
BeliefNetwork network_from_json(const nlohmann::json& j);

// Similarity graph:
//   {"hypothesis":"h","values":["h1","h2"],"edges":[["h1","h2"]]}
nlohmann::json simgraph_to_json(const SimilarityGraph& g);
SimilarityGraph simgraph_from_json(const nlohmann::json& j);

nlohmann::json global_network_to_json(const GlobalNetwork& g);

nlohmann::json triplet_to_json(const Universe& u, const Triplet& t);
nlohmann::json pair_verdict_to_json(const Universe& u, const PairVerdict& v);
nlohmann::json violation_to_json(const Universe& u, const AxiomViolation& v);

// File helpers; throw InputError on unreadable files or bad JSON.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace graphoid

#endif  // GRAPHOID_JSON_IO_HPP

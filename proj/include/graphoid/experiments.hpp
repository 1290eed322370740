#ifndef GRAPHOID_EXPERIMENTS_HPP
#define GRAPHOID_EXPERIMENTS_HPP

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace graphoid {

// Seeded verification suites. Each suite generates its fixtures
// deterministically from (n, trials, seed) and runs the corresponding
// module-level checks:
//   thm1            separable iff transitive, on closed-model and induced
//                   fixtures
//   thm3            connected components identical across orderings
//   thm4            disconnected iff uncoupled, per pair
//   thm5-spb        propositional transitivity on strictly-positive binary
//   thm5-gauss      propositional transitivity on regular Gaussians
//   thm6            propositional transitivity implies separability
//   thm7            d-separation soundness + agreement with the trail
//                   enumerator
//   lemma2          composition of total independence on closed fixtures
//   lemma8          component unions are marginally independent
//   counterexamples the pair-copy and parity fixtures behave as documented
//   unification     conditional-covariance value invariance
struct ExperimentConfig {
  std::string suite;
  int n = 5;
  int trials = 20;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  int close_cap = 10;
  int induced_cap = 6;
  int proptrans_cap = 6;
  int uncoupled_cap = 12;
  long long trail_cap = 1'000'000;
  int ordering_samples = 50;  // used when n! is too large to enumerate
  bool allow_zero_cells = false;

  nlohmann::json to_json() const;
};

struct TrialResult {
  int index = 0;
  bool pass = false;
  nlohmann::json details;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialResult> trials;
  bool aggregate_pass = false;
  nlohmann::json first_counterexample;  // null when all trials pass
  long long antecedent_hits = 0;        // proptrans suites; 0 elsewhere
  long long checked_instances = 0;
  double wall_seconds = 0.0;

  // Deterministic: excludes wall time (reported separately on stderr).
  nlohmann::json to_json() const;
};

const std::vector<std::string>& experiment_suites();

ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace graphoid

#endif  // GRAPHOID_EXPERIMENTS_HPP

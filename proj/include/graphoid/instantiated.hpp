#ifndef GRAPHOID_INSTANTIATED_HPP
#define GRAPHOID_INSTANTIATED_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphoid/gaussian.hpp"
#include "graphoid/tabular.hpp"

namespace graphoid {

inline constexpr int kDefaultPropTransCap = 6;  // scan is 8^(n-3)*|d(e)|^2

// A value-level independence statement: disjoint sets with a specific value
// for every member. Gaussian models carry no meaningful values (queries are
// value-free), so the assignments may be empty for them.
struct InstantiatedTriplet {
  VarSet X, Y, Z;
  Assignment x, y, z;  // each covers exactly its set
};

// Value-level independence model backed by a concrete distribution.
class InstantiatedModel {
 public:
  explicit InstantiatedModel(std::shared_ptr<const TabularDistribution> p);
  explicit InstantiatedModel(TabularDistribution p)
      : InstantiatedModel(
            std::make_shared<const TabularDistribution>(std::move(p))) {}
  explicit InstantiatedModel(std::shared_ptr<const GaussianModel> g);
  explicit InstantiatedModel(GaussianModel g)
      : InstantiatedModel(std::make_shared<const GaussianModel>(std::move(g))) {}

  const Universe& universe() const;
  bool tabular_backed() const { return tabular_ != nullptr; }
  const TabularDistribution& tabular() const { return *tabular_; }
  const GaussianModel& gaussian() const { return *gaussian_; }

  // Tabular backing: Eq.-1 equality at the specific values (single
  // equation); throws ZeroEvidenceError when P(Z=z) = 0. Gaussian backing:
  // set-level independence — values are irrelevant by unification, which is
  // the fixed value-level semantics for Gaussians.
  bool query(const InstantiatedTriplet& t) const;

  // Value-level statement with X, Y universally quantified at Z = z.
  bool query_all_values(VarSet X, VarSet Y, VarSet Z,
                        const Assignment& z) const;

 private:
  std::shared_ptr<const TabularDistribution> tabular_;
  std::shared_ptr<const GaussianModel> gaussian_;
  mutable std::unique_ptr<MarginalCache> cache_;
};

// Conditional model over U \ {u}: contains (X,Y;Z) iff the original
// contains (X,Y;Z + {u=val}); realized by conditioning the backing
// distribution. val is a value index for tabular backings and ignored for
// Gaussian ones (any real conditions identically).
InstantiatedModel conditional_model(const InstantiatedModel& m, VariableId u,
                                    int val, double gaussian_value = 0.0);

// Set-level model by universal quantification over values with positive
// conditioning mass. Agrees with induced_model of the backing distribution.
DependencyModel induced_uninstantiated(const InstantiatedModel& m,
                                       int max_vars = kDefaultInducedCap);

// One fully-specified axiom instance that failed: the cell split, the
// conditioning variable and value pair, and which consequent disjuncts held.
struct PropTransViolation {
  VarSet cells_a[4];  // A1..A4 (a in A1)
  VarSet cells_b[4];  // B1..B4 (b in B1)
  VariableId e = 0;
  int e_prime = 0;     // value indices for tabular backings
  int e_dprime = 0;
  bool first_disjunct = false;   // I(A1, e+A2A3A4B1..B4; 0)
  bool second_disjunct = false;  // I(B1, e+A1A2A3A4B2B3B4; 0)
};

struct PropTransReport {
  bool pass = false;
  long long checked_instances = 0;   // enumerated (cells, e, e', e'') combos
  long long antecedent_hits = 0;     // instances with all three antecedents
  long long skipped_zero_evidence = 0;
  std::optional<PropTransViolation> violation;
};

// Scans every way to pick e in U \ {a,b}, assign the remaining variables to
// the eight cells A1..A4, B1..B4 (a in A1, b in B1; cells may be empty),
// and every ordered pair of distinct values (e', e'') of e. For each
// instance whose three antecedents hold —
//   I(A, B; 0) set-level,
//   I(A1A2B3B4, B1B2A3A4; e=e') value-level,
//   I(A1A3B2B4, B1B3A2A4; e=e'') value-level —
// verifies I(A1, e+A2A3A4B1B2B3B4; 0) or I(B1, e+A1A2A3A4B2B3B4; 0).
// Zero-evidence value pairs are skipped and counted (impossible for
// strictly positive backings). Throws CapacityError above max_vars.
PropTransReport check_propositional_transitivity(const InstantiatedModel& m,
                                                 VariableId a, VariableId b,
                                                 int max_vars = kDefaultPropTransCap);

struct UnificationReport {
  bool pass = false;
  double max_deviation = 0.0;
  VarSet worst_z;
};

// Verifies the mechanism behind unification: the conditional covariance is
// identical (entrywise within tolerance) across a grid of conditioning
// values. Checks every conditioning set in zsets; defaults to all
// singletons when zsets is empty. The grid assigns each conditioned
// variable every value in grid_values.
UnificationReport check_unification(
    const GaussianModel& g, const std::vector<VarSet>& zsets = {},
    const std::vector<double>& grid_values = {-1.0, 0.0, 5.0},
    double tolerance = kDefaultGaussianTolerance);

}  // namespace graphoid

#endif  // GRAPHOID_INSTANTIATED_HPP

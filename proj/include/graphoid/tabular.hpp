#ifndef GRAPHOID_TABULAR_HPP
#define GRAPHOID_TABULAR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "graphoid/oracle.hpp"
#include "graphoid/rational.hpp"
#include "graphoid/triplet.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

struct TabularVariable {
  std::string name;
  std::vector<std::string> domain;  // nonempty; values are strings
};

// A partial joint assignment: value indices for the variables in vars().
class Assignment {
 public:
  Assignment() = default;

  void set(VariableId v, int value_index);
  bool has(VariableId v) const { return vars_.contains(v); }
  int value(VariableId v) const;
  VarSet vars() const { return vars_; }
  bool empty() const { return vars_.empty(); }

  // Items in increasing variable order.
  const std::vector<std::pair<VariableId, int>>& items() const {
    return items_;
  }

 private:
  VarSet vars_;
  std::vector<std::pair<VariableId, int>> items_;
};

// Exact-rational joint probability table over finite-domain variables.
// Cells are stored flat in mixed-radix order with variable 0 as the most
// significant digit; zero cells are kept so the table always covers the
// full product space. Immutable after construction.
class TabularDistribution {
 public:
  TabularDistribution(std::vector<TabularVariable> vars,
                      std::vector<Rational> cells);

  const std::vector<TabularVariable>& variables() const { return vars_; }
  const Universe& universe() const { return universe_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  int domain_size(VariableId v) const {
    return static_cast<int>(vars_[v].domain.size());
  }

  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<Rational>& cells() const { return cells_; }

  // Probability of a full joint assignment given as per-variable value
  // indices (size = var_count()).
  const Rational& prob(const std::vector<int>& values) const;
  // Marginal probability of a partial assignment (sums the rest out).
  Rational prob(const Assignment& partial) const;

  std::size_t index_of(const std::vector<int>& values) const;
  std::vector<int> values_at(std::size_t index) const;

  // Value-index lookup by name; throws InputError for out-of-domain values.
  int value_index(VariableId v, const std::string& value) const;

  bool strictly_positive() const;

 private:
  std::vector<TabularVariable> vars_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> strides_;
  Universe universe_;
};

// Sums cells over the variables outside s. Result is a distribution over
// the variables of s (in universe order) and sums to 1 exactly.
TabularDistribution marginalize(const TabularDistribution& p, VarSet s);

// Restricted, renormalized table over the unassigned variables.
// Throws ZeroEvidenceError when P(e) = 0.
TabularDistribution condition_on(const TabularDistribution& p,
                                 const Assignment& e);

// Keeps only the listed value indices of variable v (in the given order)
// and renormalizes; v remains a variable with the reduced domain.
// Throws ZeroEvidenceError when the kept mass is zero.
TabularDistribution restrict_domain(const TabularDistribution& p,
                                    VariableId v,
                                    const std::vector<int>& keep);

// Per-distribution cache of marginal tables keyed by var-set; shared by the
// independence routines so repeated scans stay cheap. Thread-safe.
class MarginalCache {
 public:
  explicit MarginalCache(const TabularDistribution& p) : p_(p) {}

  // Flat marginal over the members of s (universe order, mixed radix).
  const std::vector<Rational>& marginal(VarSet s);
  // Marginal probability of a partial assignment.
  Rational prob(const Assignment& a);
  const TabularDistribution& distribution() const { return p_; }

 private:
  const TabularDistribution& p_;
  std::mutex mu_;
  std::map<std::uint32_t, std::vector<Rational>> tables_;
};

// Set-level conditional independence, decided exactly via the
// cross-multiplied form P(XYZ)*P(Z) = P(XZ)*P(YZ) for every value tuple.
// The form avoids division and holds vacuously where P(Z) = 0.
bool tabular_independent(const TabularDistribution& p, VarSet X, VarSet Y,
                         VarSet Z);
bool tabular_independent(MarginalCache& cache, VarSet X, VarSet Y, VarSet Z);

// Value-level statement with X and Y universally quantified and Z fixed at
// z. Throws ZeroEvidenceError when P(Z=z) = 0.
bool tabular_independent_at(const TabularDistribution& p, VarSet X, VarSet Y,
                            VarSet Z, const Assignment& z);
bool tabular_independent_at(MarginalCache& cache, VarSet X, VarSet Y, VarSet Z,
                            const Assignment& z);

// Eq.-1 independence oracle over a tabular distribution, with memoized
// marginals and query results.
class TabularOracle final : public IndependenceOracle {
 public:
  using IndependenceOracle::contains;
  explicit TabularOracle(std::shared_ptr<const TabularDistribution> p);
  explicit TabularOracle(TabularDistribution p)
      : TabularOracle(
            std::make_shared<const TabularDistribution>(std::move(p))) {}

  const Universe& universe() const override;
  bool contains(const Triplet& t) const override;
  const TabularDistribution& distribution() const { return *p_; }

 private:
  std::shared_ptr<const TabularDistribution> p_;
  mutable MarginalCache cache_;
  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, bool> memo_;
};

}  // namespace graphoid

#endif  // GRAPHOID_TABULAR_HPP

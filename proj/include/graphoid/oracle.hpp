#ifndef GRAPHOID_ORACLE_HPP
#define GRAPHOID_ORACLE_HPP

#include <memory>

#include "graphoid/dependency_model.hpp"
#include "graphoid/triplet.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

inline constexpr int kDefaultInducedCap = 6;

// Deterministic membership interface over independence triplets. Unifies
// explicit dependency models with distribution-backed queries; every
// implementation answers trivial (empty-side) triplets with true.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  virtual const Universe& universe() const = 0;
  virtual bool contains(const Triplet& t) const = 0;

  bool contains(VarSet X, VarSet Y, VarSet Z) const {
    return contains(Triplet{X, Y, Z});
  }
};

// A dependency model used as an oracle.
class ModelOracle final : public IndependenceOracle {
 public:
  using IndependenceOracle::contains;
  explicit ModelOracle(DependencyModel m) : model_(std::move(m)) {}

  const Universe& universe() const override { return model_.universe(); }
  bool contains(const Triplet& t) const override { return model_.contains(t); }
  const DependencyModel& model() const { return model_; }

 private:
  DependencyModel model_;
};

// Enumerates every disjoint triplet over the oracle's universe, queries the
// oracle, and returns the explicit model. The closed flag is set iff the
// result verifies as closed (it always does for probabilistic oracles).
// Throws CapacityError above max_vars.
DependencyModel induced_model(const IndependenceOracle& oracle,
                              int max_vars = kDefaultInducedCap);

}  // namespace graphoid

#endif  // GRAPHOID_ORACLE_HPP

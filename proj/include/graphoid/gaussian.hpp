#ifndef GRAPHOID_GAUSSIAN_HPP
#define GRAPHOID_GAUSSIAN_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "graphoid/oracle.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

inline constexpr double kDefaultGaussianTolerance = 1e-9;

// Multivariate normal with finite means and positive-definite covariance.
// Construction validates symmetry (within tolerance), strictly positive
// diagonal entries, and positive definiteness via Cholesky; failures raise
// RegularityError. Immutable after construction.
class GaussianModel {
 public:
  GaussianModel(Universe u, Eigen::VectorXd mean, Eigen::MatrixXd covariance,
                double tolerance = kDefaultGaussianTolerance);

  const Universe& universe() const { return universe_; }
  int var_count() const { return universe_.size(); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return cov_; }
  double tolerance() const { return tol_; }

 private:
  Universe universe_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  double tol_;
};

// Conditional model over the remaining variables: mean shifted by the
// regression term, covariance the Schur complement S_RR - S_RZ S_ZZ^-1 S_ZR.
// The covariance does not depend on z. Throws RegularityError when the
// conditioning block is singular beyond tolerance, DomainError when Z is
// not a subset of the universe or z has the wrong length.
GaussianModel gaussian_conditional(const GaussianModel& g, VarSet Z,
                                   const Eigen::VectorXd& z);

// True iff every entry of the conditional cross-covariance block between X
// and Y given Z is zero within tolerance after normalizing by the
// conditional standard deviations.
bool gaussian_independent(const GaussianModel& g, VarSet X, VarSet Y,
                          VarSet Z);

// Conditional covariance of the non-Z variables given Z (value-free).
Eigen::MatrixXd conditional_covariance(const GaussianModel& g, VarSet Z);

class GaussianOracle final : public IndependenceOracle {
 public:
  using IndependenceOracle::contains;
  explicit GaussianOracle(std::shared_ptr<const GaussianModel> g)
      : g_(std::move(g)) {}
  explicit GaussianOracle(GaussianModel g)
      : g_(std::make_shared<const GaussianModel>(std::move(g))) {}

  const Universe& universe() const override { return g_->universe(); }
  bool contains(const Triplet& t) const override;
  const GaussianModel& model() const { return *g_; }

 private:
  std::shared_ptr<const GaussianModel> g_;
  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, bool> memo_;
};

}  // namespace graphoid

#endif  // GRAPHOID_GAUSSIAN_HPP

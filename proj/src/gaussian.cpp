#include "graphoid/gaussian.hpp"

#include <cmath>
#include <string>

#include "graphoid/errors.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

GaussianModel::GaussianModel(Universe u, Eigen::VectorXd mean,
                             Eigen::MatrixXd covariance, double tolerance)
    : universe_(std::move(u)),
      mean_(std::move(mean)),
      cov_(std::move(covariance)),
      tol_(tolerance) {
  const int n = universe_.size();
  if (tol_ < 0) throw InputError("negative tolerance");
  if (mean_.size() != n || cov_.rows() != n || cov_.cols() != n)
    throw InputError("mean/covariance dimensions do not match the universe");
  if (!mean_.allFinite() || !cov_.allFinite())
    throw RegularityError("non-finite mean or covariance entry");
  if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > tol_)
    throw RegularityError("covariance is not symmetric within tolerance");
  for (int i = 0; i < n; ++i)
    if (cov_(i, i) <= 0)
      throw RegularityError("variance of " + universe_.name(i) +
                            " is not positive");
  if (n > 0 && Eigen::LLT<Eigen::MatrixXd>(cov_).info() != Eigen::Success)
    throw RegularityError("covariance is not positive definite");
}

namespace {

std::vector<int> member_indices(VarSet s) { return s.members(); }

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, const std::vector<int>& r,
                          const std::vector<int>& c) {
  Eigen::MatrixXd out(r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out(i, j) = m(r[i], c[j]);
  return out;
}

// Schur complement S_RR - S_RZ S_ZZ^-1 S_ZR over the given index split.
Eigen::MatrixXd schur_complement(const GaussianModel& g,
                                 const std::vector<int>& rest,
                                 const std::vector<int>& zs) {
  const Eigen::MatrixXd& cov = g.covariance();
  const Eigen::MatrixXd s_rr = submatrix(cov, rest, rest);
  if (zs.empty()) return s_rr;
  const Eigen::MatrixXd s_rz = submatrix(cov, rest, zs);
  const Eigen::MatrixXd s_zz = submatrix(cov, zs, zs);
  const Eigen::LLT<Eigen::MatrixXd> llt(s_zz);
  if (llt.info() != Eigen::Success)
    throw RegularityError("singular conditioning block");
  Eigen::MatrixXd result = s_rr - s_rz * llt.solve(s_rz.transpose());
  // The solve leaves sub-tolerance asymmetry; keep the result symmetric.
  result = ((result + result.transpose()) / 2.0).eval();
  return result;
}

}  // namespace

Eigen::MatrixXd conditional_covariance(const GaussianModel& g, VarSet Z) {
  if (!Z.subset_of(g.universe().all()))
    throw DomainError("conditioning set outside the universe");
  return schur_complement(g, member_indices(g.universe().all() - Z),
                          member_indices(Z));
}

GaussianModel gaussian_conditional(const GaussianModel& g, VarSet Z,
                                   const Eigen::VectorXd& z) {
  if (!Z.subset_of(g.universe().all()))
    throw DomainError("conditioning set outside the universe");
  if (z.size() != Z.size())
    throw DomainError("conditioning vector length does not match Z");
  if (Z.empty()) return g;

  const std::vector<int> rest = member_indices(g.universe().all() - Z);
  const std::vector<int> zs = member_indices(Z);

  const Eigen::MatrixXd s_rz = submatrix(g.covariance(), rest, zs);
  const Eigen::MatrixXd s_zz = submatrix(g.covariance(), zs, zs);
  const Eigen::LLT<Eigen::MatrixXd> llt(s_zz);
  if (llt.info() != Eigen::Success)
    throw RegularityError("singular conditioning block");

  Eigen::VectorXd mu_r(rest.size()), mu_z(zs.size());
  for (std::size_t i = 0; i < rest.size(); ++i) mu_r(i) = g.mean()(rest[i]);
  for (std::size_t i = 0; i < zs.size(); ++i) mu_z(i) = g.mean()(zs[i]);

  const Eigen::VectorXd mean = mu_r + s_rz * llt.solve(z - mu_z);
  const Eigen::MatrixXd cov = schur_complement(g, rest, zs);

  std::vector<std::string> names;
  for (int i : rest) names.push_back(g.universe().name(i));
  return GaussianModel(Universe(std::move(names)), mean, cov, g.tolerance());
}

bool gaussian_independent(const GaussianModel& g, VarSet X, VarSet Y,
                          VarSet Z) {
  require_disjoint(X, Y, Z);
  if (!(X | Y | Z).subset_of(g.universe().all()))
    throw InvalidTripletError("independence query outside the universe");
  if (X.empty() || Y.empty()) return true;

  // Conditional covariance of X+Y given Z, then the normalized cross block.
  const VarSet s = X | Y;
  const std::vector<int> rest = member_indices(s);
  const Eigen::MatrixXd cond = schur_complement(g, rest, member_indices(Z));

  std::vector<int> xi, yi;
  for (std::size_t i = 0; i < rest.size(); ++i)
    (X.contains(rest[i]) ? xi : yi).push_back(static_cast<int>(i));

  for (int i : xi) {
    for (int j : yi) {
      const double vx = cond(i, i), vy = cond(j, j);
      if (vx <= 0 || vy <= 0)
        throw RegularityError("conditional variance is not positive");
      if (std::abs(cond(i, j)) / std::sqrt(vx * vy) > g.tolerance())
        return false;
    }
  }
  return true;
}

bool GaussianOracle::contains(const Triplet& t) const {
  const Triplet c = normalize(t);
  if (c.trivial()) return true;
  const std::uint64_t key = c.pack();
  {
    std::lock_guard<std::mutex> lock(mu_);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const bool ans = gaussian_independent(*g_, c.X, c.Y, c.Z);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(key, ans);
  return ans;
}

}  // namespace graphoid

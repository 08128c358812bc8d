#include "ff5/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ff5/distributions.hpp"
#include "ff5/linalg.hpp"

namespace ff5 {

RegressionResult ols(const Eigen::Ref<const Eigen::VectorXd>& y,
                     const Eigen::Ref<const Eigen::MatrixXd>& x, bool add_intercept) {
  const Eigen::Index n = y.size();
  if (x.rows() != n) throw Error("ols: y and X row counts differ");
  const Eigen::Index k = x.cols() + (add_intercept ? 1 : 0);
  if (k == 0) throw Error("ols: empty design");
  if (n <= k)
    throw Error("ols: need n_obs > n_params (" + std::to_string(n) + " <= " +
                std::to_string(k) + ")");

  Eigen::MatrixXd design(n, k);
  if (add_intercept) {
    design.col(0).setOnes();
    design.rightCols(x.cols()) = x;
  } else {
    design = x;
  }

  const Eigen::MatrixXd xtx = design.transpose() * design;
  const Eigen::VectorXd xty = design.transpose() * y;
  const Eigen::MatrixXd xtx_inv =
      solve_spd(xtx, Eigen::MatrixXd::Identity(k, k));

  RegressionResult r;
  r.n_obs = static_cast<int>(n);
  r.n_params = static_cast<int>(k);
  r.has_intercept = add_intercept;
  r.coefficients = xtx_inv * xty;
  r.fitted = design * r.coefficients;
  r.residuals = y - r.fitted;
  r.rss = r.residuals.squaredNorm();

  const double dof = static_cast<double>(n - k);
  r.sigma2 = r.rss / dof;
  r.std_errors = (r.sigma2 * xtx_inv.diagonal().array()).cwiseMax(0.0).sqrt();

  r.t_stats.resize(k);
  r.p_values.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double se = r.std_errors(j);
    const double coef = r.coefficients(j);
    double t;
    if (se > 0)
      t = coef / se;
    else
      t = coef == 0 ? 0.0
                    : std::copysign(std::numeric_limits<double>::infinity(), coef);
    r.t_stats(j) = t;
    r.p_values(j) = t_two_sided_p(t, dof);
  }

  r.tss = add_intercept ? (y.array() - y.mean()).matrix().squaredNorm()
                        : y.squaredNorm();
  if (r.tss > 0)
    r.r_squared = 1.0 - r.rss / r.tss;
  else
    r.r_squared = 0.0;
  r.r_squared = std::clamp(r.r_squared, 0.0, 1.0);
  const double n_d = static_cast<double>(n);
  const double adj_num = add_intercept ? n_d - 1 : n_d;
  r.adj_r_squared = 1.0 - (1.0 - r.r_squared) * adj_num / dof;
  return r;
}

}  // namespace ff5

#include "ff5/grs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ff5/distributions.hpp"
#include "ff5/linalg.hpp"

namespace ff5 {

GrsResult grs_test(const Eigen::Ref<const Eigen::VectorXd>& alphas,
                   const Eigen::Ref<const Eigen::MatrixXd>& residuals,
                   const Eigen::Ref<const Eigen::MatrixXd>& factors) {
  const Eigen::Index t = residuals.rows();
  const Eigen::Index n = residuals.cols();
  const Eigen::Index l = factors.cols();
  if (alphas.size() != n) throw Error("grs_test: alpha count must match residual columns");
  if (factors.rows() != t) throw Error("grs_test: factors and residuals row counts differ");
  if (n < 1 || l < 1) throw Error("grs_test: need at least one asset and one factor");
  if (t <= n + l)
    throw Error("grs_test: need t > n + l (t=" + std::to_string(t) + ", n=" +
                std::to_string(n) + ", l=" + std::to_string(l) + ")");

  const Eigen::MatrixXd sigma = residuals.transpose() * residuals / double(t);
  const Eigen::RowVectorXd mu = factors.colwise().mean();
  const Eigen::MatrixXd centered = factors.rowwise() - mu;
  const Eigen::MatrixXd omega = centered.transpose() * centered / double(t);

  const double alpha_quad =
      std::max(0.0, alphas.dot(Eigen::VectorXd(solve_spd(sigma, alphas))));
  const Eigen::VectorXd mu_col = mu.transpose();
  const double mean_quad =
      std::max(0.0, mu_col.dot(Eigen::VectorXd(solve_spd(omega, mu_col))));

  GrsResult r;
  r.df1 = static_cast<int>(n);
  r.df2 = static_cast<int>(t - n - l);
  r.statistic = double(r.df2) / double(n) * alpha_quad / (1.0 + mean_quad);
  r.p_value = 1.0 - f_cdf(r.statistic, double(r.df1), double(r.df2));
  r.mean_abs_alpha = alphas.cwiseAbs().mean();
  return r;
}

GrsRun grs_from_assets(const Eigen::Ref<const Eigen::MatrixXd>& assets,
                       const Eigen::Ref<const Eigen::MatrixXd>& factors) {
  const Eigen::Index t = assets.rows();
  const Eigen::Index n = assets.cols();
  const Eigen::Index l = factors.cols();
  if (factors.rows() != t) throw Error("grs_from_assets: asset/factor row counts differ");
  if (t <= n + l)
    throw Error("grs_from_assets: need t > n + l (t=" + std::to_string(t) + ", n=" +
                std::to_string(n) + ", l=" + std::to_string(l) + ")");

  GrsRun run;
  run.regressions.reserve(n);
  Eigen::VectorXd alphas(n);
  Eigen::MatrixXd residuals(t, n);
  bool all_exact = true;
  double alpha_scale = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    RegressionResult reg = ols(assets.col(j), factors, /*add_intercept=*/true);
    alphas(j) = reg.coefficients(0);
    residuals.col(j) = reg.residuals;
    // rss below rounding noise relative to the asset's variation counts
    // as an exact fit; tss == 0 (constant asset) is degenerate too
    if (reg.rss > 1e-20 * reg.tss && reg.tss > 0) all_exact = false;
    alpha_scale = std::max(alpha_scale, std::sqrt(reg.tss / double(t)));
    run.regressions.push_back(std::move(reg));
  }

  if (all_exact) {
    // Assets span the factors exactly; the residual covariance is pure
    // rounding noise and the test degenerates. Zero intercepts mean exact
    // pricing (statistic 0); non-zero intercepts are deterministic
    // mispricing (reject with certainty).
    GrsResult r;
    r.df1 = static_cast<int>(n);
    r.df2 = static_cast<int>(t - n - l);
    r.mean_abs_alpha = alphas.cwiseAbs().mean();
    if (alphas.cwiseAbs().maxCoeff() <= 1e-10 * std::max(alpha_scale, 1e-300)) {
      r.statistic = 0.0;
      r.p_value = 1.0;
    } else {
      r.statistic = std::numeric_limits<double>::infinity();
      r.p_value = 0.0;
    }
    run.grs = r;
    return run;
  }

  run.grs = grs_test(alphas, residuals, factors);
  return run;
}

}  // namespace ff5

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ff5/regression.hpp"

namespace ff5 {

/// Joint zero-intercept test statistic with its exact F reference
/// distribution, degrees of freedom (n, t - n - l).
struct GrsResult {
  double statistic = 0;
  int df1 = 0;  // n, number of test assets
  int df2 = 0;  // t - n - l
  double p_value = 1;
  double mean_abs_alpha = 0;
};

/// GRS statistic from pre-computed regression intercepts and residuals.
///
///   GRS = (t-n-l)/n * (a' S^-1 a) / (1 + m' W^-1 m)
///
/// with S the residual covariance and W the factor covariance, both with
/// maximum-likelihood divisor t, and m the factor sample means. Columns of
/// `residuals` must come from regressions of each asset on exactly these
/// factors plus an intercept. Throws when t <= n + l or when S or W is
/// singular.
GrsResult grs_test(const Eigen::Ref<const Eigen::VectorXd>& alphas,
                   const Eigen::Ref<const Eigen::MatrixXd>& residuals,
                   const Eigen::Ref<const Eigen::MatrixXd>& factors);

/// Runs the n time-series regressions (asset by asset, in column order)
/// and then the joint test. Exact pricing -- every asset fits the factors
/// to machine precision with zero intercept -- is reported as statistic 0,
/// p = 1 instead of tripping the singular residual covariance.
struct GrsRun {
  GrsResult grs;
  std::vector<RegressionResult> regressions;
};
GrsRun grs_from_assets(const Eigen::Ref<const Eigen::MatrixXd>& assets,
                       const Eigen::Ref<const Eigen::MatrixXd>& factors);

}  // namespace ff5

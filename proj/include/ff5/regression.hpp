#pragma once

#include <Eigen/Dense>

#include "ff5/errors.hpp"

namespace ff5 {

/// Output of a time-series OLS fit. When an intercept is present it is
/// coefficient 0; slope order follows the design columns.
struct RegressionResult {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd std_errors;   // classical, from sigma2 * diag((X'X)^-1)
  Eigen::VectorXd t_stats;
  Eigen::VectorXd p_values;     // two-sided, t(n_obs - n_params)
  Eigen::VectorXd fitted;
  Eigen::VectorXd residuals;
  double sigma2 = 0;            // RSS / (n_obs - n_params)
  double rss = 0;
  double tss = 0;               // centered iff has_intercept
  double r_squared = 0;
  double adj_r_squared = 0;
  int n_obs = 0;
  int n_params = 0;
  bool has_intercept = false;

  double intercept() const { return has_intercept ? coefficients(0) : 0.0; }
};

/// Ordinary least squares of y on the columns of x, optionally prepending
/// a constant. Classical (homoskedastic) inference. Throws
/// SingularMatrixError on a rank-deficient design and Error when
/// n_obs <= n_params.
RegressionResult ols(const Eigen::Ref<const Eigen::VectorXd>& y,
                     const Eigen::Ref<const Eigen::MatrixXd>& x,
                     bool add_intercept = true);

}  // namespace ff5

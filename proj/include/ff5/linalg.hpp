#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "ff5/errors.hpp"

namespace ff5 {

/// Relative floor for Cholesky pivots: a pivot d_k <= tol * max(diag(A))
/// is treated as a singularity.
inline constexpr double kSpdPivotRelTol = 1e-12;
/// Condition estimates at or above this trip SpdSolveInfo::ill_conditioned.
inline constexpr double kSpdConditionWarn = 1e10;
/// Symmetry check: max |A - A'| <= tol * max(1, max |A|).
inline constexpr double kSpdSymmetryRelTol = 1e-12;

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(std::ptrdiff_t pivot_index, double pivot_value)
      : Error("matrix is not positive definite: pivot " + std::to_string(pivot_index) +
              " = " + std::to_string(pivot_value)),
        pivot_index_(pivot_index),
        pivot_value_(pivot_value) {}
  std::ptrdiff_t pivot_index() const { return pivot_index_; }
  double pivot_value() const { return pivot_value_; }

 private:
  std::ptrdiff_t pivot_index_;
  double pivot_value_;
};

struct SpdSolveInfo {
  double min_pivot = 0;          // smallest diagonal of the Cholesky factor
  double max_pivot = 0;
  double condition_estimate = 0; // (max_pivot / min_pivot)^2
  bool ill_conditioned = false;
};

/// Solves A X = B for symmetric positive-definite A by an unpivoted Cholesky
/// factorization A = L L'. Column count of B is free, so a multi-RHS solve
/// (e.g. for an explicit inverse) is one call. The factorization is written
/// out here rather than delegated so a failing pivot can be reported by
/// index with a fixed, documented tolerance.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> solve_spd(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
    SpdSolveInfo* info = nullptr) {
  using Scalar = typename DerivedA::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error("solve_spd: matrix must be square");
  if (b.rows() != n) throw Error("solve_spd: dimension mismatch between A and B");

  Mat l = a;
  const Scalar scale = l.cwiseAbs().maxCoeff();
  if ((l - l.transpose()).cwiseAbs().maxCoeff() >
      kSpdSymmetryRelTol * std::max<Scalar>(Scalar(1), scale))
    throw Error("solve_spd: matrix is not symmetric");

  const Scalar pivot_floor = kSpdPivotRelTol * l.diagonal().cwiseAbs().maxCoeff();
  Scalar min_pivot = std::numeric_limits<Scalar>::infinity();
  Scalar max_pivot = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar d = l(j, j) - l.row(j).head(j).squaredNorm();
    if (!(d > pivot_floor)) throw SingularMatrixError(j, static_cast<double>(d));
    d = std::sqrt(d);
    l(j, j) = d;
    min_pivot = std::min(min_pivot, d);
    max_pivot = std::max(max_pivot, d);
    for (Eigen::Index i = j + 1; i < n; ++i)
      l(i, j) = (l(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / d;
  }
  if (info) {
    info->min_pivot = static_cast<double>(min_pivot);
    info->max_pivot = static_cast<double>(max_pivot);
    const double ratio = n == 0 ? 1.0 : static_cast<double>(max_pivot / min_pivot);
    info->condition_estimate = ratio * ratio;
    info->ill_conditioned = info->condition_estimate >= kSpdConditionWarn;
  }

  Mat x = b;
  l.template triangularView<Eigen::Lower>().solveInPlace(x);
  l.template triangularView<Eigen::Lower>().transpose().solveInPlace(x);
  return x;
}

/// Sample Pearson correlation of two equal-length vectors.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar pearson_correlation(const Eigen::MatrixBase<DerivedA>& x,
                                              const Eigen::MatrixBase<DerivedB>& y) {
  using Scalar = typename DerivedA::Scalar;
  if (x.size() != y.size() || x.size() < 2)
    throw Error("pearson_correlation: need two vectors of equal length >= 2");
  const auto xc = (x.array() - x.mean()).eval();
  const auto yc = (y.array() - y.mean()).eval();
  const Scalar sx = std::sqrt(xc.square().sum());
  const Scalar sy = std::sqrt(yc.square().sum());
  if (sx == 0 || sy == 0) throw Error("pearson_correlation: zero-variance input");
  return (xc * yc).sum() / (sx * sy);
}

}  // namespace ff5

#pragma once

#include <cmath>
#include <limits>

#include "ff5/errors.hpp"

namespace ff5 {

template <typename Scalar>
Scalar log_beta(Scalar a, Scalar b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace detail {

// Continued fraction for the regularized incomplete beta function,
// modified Lentz iteration. Converges fast for x < (a+1)/(a+b+2).
// https://en.wikipedia.org/wiki/Beta_function#Incomplete_beta_function
template <typename Scalar>
Scalar beta_continued_fraction(Scalar x, Scalar a, Scalar b) {
  const Scalar tiny = std::numeric_limits<Scalar>::min() / std::numeric_limits<Scalar>::epsilon();
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar qab = a + b;
  const Scalar qap = a + 1;
  const Scalar qam = a - 1;
  Scalar c = 1;
  Scalar d = 1 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1 / d;
  Scalar h = d;
  for (int m = 1; m <= 500; ++m) {
    const Scalar m2 = Scalar(2 * m);
    Scalar aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    const Scalar del = d * c;
    h *= del;
    if (std::fabs(del - 1) <= 3 * eps) break;
  }
  return h;
}

}  // namespace detail

/// I_x(a, b), the regularized incomplete beta function, for x in [0, 1],
/// a > 0, b > 0.
template <typename Scalar>
Scalar regularized_incomplete_beta(Scalar x, Scalar a, Scalar b) {
  if (!(a > 0 && b > 0)) throw Error("regularized_incomplete_beta: a, b must be positive");
  if (!(x >= 0 && x <= 1)) throw Error("regularized_incomplete_beta: x must lie in [0, 1]");
  if (x == 0) return 0;
  if (x == 1) return 1;
  const Scalar front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  Scalar r;
  if (x < (a + 1) / (a + b + 2))
    r = front * detail::beta_continued_fraction(x, a, b) / a;
  else
    r = 1 - front * detail::beta_continued_fraction(1 - x, b, a) / b;
  if (r < 0) return 0;
  if (r > 1) return 1;
  return r;
}

/// CDF of the F distribution with (d1, d2) degrees of freedom.
/// Exact route: F(x) = I_{d1 x / (d1 x + d2)}(d1/2, d2/2).
template <typename Scalar>
Scalar f_cdf(Scalar x, Scalar d1, Scalar d2) {
  if (!(d1 > 0 && d2 > 0)) throw Error("f_cdf: degrees of freedom must be positive");
  if (std::isnan(x)) return std::numeric_limits<Scalar>::quiet_NaN();
  if (x <= 0) return 0;
  if (std::isinf(x)) return 1;
  const Scalar z = d1 * x / (d1 * x + d2);
  return regularized_incomplete_beta(z, d1 / 2, d2 / 2);
}

/// CDF of Student's t distribution with df degrees of freedom.
/// t_cdf(0) = 0.5 and t_cdf(-x) = 1 - t_cdf(x) hold exactly by construction.
template <typename Scalar>
Scalar t_cdf(Scalar x, Scalar df) {
  if (!(df > 0)) throw Error("t_cdf: degrees of freedom must be positive");
  if (std::isnan(x)) return std::numeric_limits<Scalar>::quiet_NaN();
  if (x == 0) return Scalar(0.5);
  if (std::isinf(x)) return x > 0 ? 1 : 0;
  const Scalar z = df / (df + x * x);
  const Scalar tail = Scalar(0.5) * regularized_incomplete_beta(z, df / 2, Scalar(0.5));
  return x > 0 ? 1 - tail : tail;
}

/// Two-sided p-value of a t statistic with df degrees of freedom.
template <typename Scalar>
Scalar t_two_sided_p(Scalar t, Scalar df) {
  if (std::isnan(t)) return std::numeric_limits<Scalar>::quiet_NaN();
  return 2 * t_cdf(-std::fabs(t), df);
}

}  // namespace ff5

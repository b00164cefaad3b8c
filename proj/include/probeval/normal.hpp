#pragma once

namespace probeval {

/// Standard normal density.
double std_normal_pdf(double x) noexcept;

/// Standard normal CDF, computed from the complementary error function of
/// |x| so that cdf(x) and cdf(-x) derive from the same tail mass and the
/// reflection identity holds to the last ulp. Absolute error well below
/// 1e-7 everywhere.
double std_normal_cdf(double x) noexcept;

/// Inverse of std_normal_cdf on (0, 1). Throws std::invalid_argument
/// outside the open interval.
double std_normal_quantile(double p);

}  // namespace probeval

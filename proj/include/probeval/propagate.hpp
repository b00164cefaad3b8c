#pragma once

#include <vector>

#include "probeval/core.hpp"

namespace probeval {

/// Central moments m_1..m_K of a random argument around its expectation mu.
/// m_0 = 1 is implicit; m_1 must be 0 by definition.
struct MomentVector {
    MomentVector(double mu, std::vector<double> central_moments);

    double mu;
    std::vector<double> central_moments;  // central_moments[k-1] == m_k

    /// Highest available moment order.
    std::size_t order() const noexcept { return central_moments.size(); }
    double moment(std::size_t k) const;  // m_k, k >= 0
};

/// Derivatives g(mu), g'(mu), ..., g^(K)(mu) of a smooth map evaluated at
/// the argument's expectation.
struct DerivativeEvaluations {
    explicit DerivativeEvaluations(std::vector<double> values);

    std::vector<double> values;  // values[k] == g^(k)(mu)
};

/// Central moments of a Gaussian N(mu, sigma) up to max_order:
/// zero for odd k, sigma^k (k-1)!! for even k.
MomentVector gaussian_central_moments(double mu, double sigma, std::size_t max_order);

/// Truncated Taylor approximation of E[g(X)]:
///   sum_{k=0..K} g^(k)(mu)/k! * m_k.
double taylor_expectation(const DerivativeEvaluations& d, const MomentVector& m,
                          std::size_t order);

/// Term-wise truncated Taylor approximation of V[g(X)]:
///   sum_{k=1..K} (g^(k)(mu)/k!)^2 * (m_2k - m_k^2).
/// Requires central moments up to 2K. Covariances between distinct powers
/// of (X - mu) are dropped; this is the quasi-linear form, not an exact
/// variance.
double taylor_variance(const DerivativeEvaluations& d, const MomentVector& m, std::size_t order);

/// Distribution of the mean squared error over an evaluation set:
///   mean     = (1/N) sum_nu (sigma_nu^2 + delta_nu^2)
///   variance = (2/N^2) sum_nu (sigma_nu^4 + 2 sigma_nu^2 delta_nu^2)
/// Both are exact for Gaussian feedback. Per-pair terms are accumulated in
/// index order so results are bit-reproducible.
MetricDistribution mse_distribution(const EvaluationSet& set);

/// Gaussian approximation of the root mean squared error:
///   mean = sqrt(E[Z]),  variance = V[Z] / (4 E[Z])
/// with E[Z], V[Z] from mse_distribution. A set with E[Z] == 0 (all
/// deviations and uncertainties zero) yields the point mass (0, 0).
/// First-order in the square root, so intended for reasonably large N.
MetricDistribution rmse_distribution(const EvaluationSet& set);

}  // namespace probeval

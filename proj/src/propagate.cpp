#include "probeval/propagate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace probeval {

MomentVector::MomentVector(double mu_, std::vector<double> central_moments_)
    : mu(mu_), central_moments(std::move(central_moments_)) {
    if (!std::isfinite(mu)) {
        throw std::invalid_argument("MomentVector: mu must be finite");
    }
    for (std::size_t k = 1; k <= central_moments.size(); ++k) {
        const double m = central_moments[k - 1];
        if (!std::isfinite(m)) {
            throw std::invalid_argument("MomentVector: m_" + std::to_string(k) +
                                        " is not finite");
        }
        if (k == 1 && m != 0.0) {
            throw std::invalid_argument("MomentVector: m_1 must be 0 by definition");
        }
        if (k % 2 == 0 && m < 0.0) {
            throw std::invalid_argument("MomentVector: even-order moment m_" +
                                        std::to_string(k) + " must be >= 0");
        }
    }
}

double MomentVector::moment(std::size_t k) const {
    if (k == 0) return 1.0;
    if (k > central_moments.size()) {
        throw std::invalid_argument("MomentVector: m_" + std::to_string(k) +
                                    " not available (have up to m_" +
                                    std::to_string(central_moments.size()) + ")");
    }
    return central_moments[k - 1];
}

DerivativeEvaluations::DerivativeEvaluations(std::vector<double> values_)
    : values(std::move(values_)) {
    if (values.empty()) {
        throw std::invalid_argument("DerivativeEvaluations: needs at least g(mu)");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("DerivativeEvaluations: non-finite derivative value");
        }
    }
}

MomentVector gaussian_central_moments(double mu, double sigma, std::size_t max_order) {
    std::vector<double> moments(max_order, 0.0);
    // m_k = sigma^k (k-1)!! for even k.
    double value = 1.0;
    for (std::size_t k = 2; k <= max_order; k += 2) {
        value *= sigma * sigma * static_cast<double>(k - 1);
        moments[k - 1] = value;
    }
    return MomentVector(mu, std::move(moments));
}

namespace {

double factorial(std::size_t k) {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

}  // namespace

double taylor_expectation(const DerivativeEvaluations& d, const MomentVector& m,
                          std::size_t order) {
    if (d.values.size() < order + 1) {
        throw std::invalid_argument("taylor_expectation: order " + std::to_string(order) +
                                    " exceeds supplied derivatives");
    }
    if (m.order() < order) {
        throw std::invalid_argument("taylor_expectation: order " + std::to_string(order) +
                                    " exceeds supplied moments");
    }
    double sum = d.values[0];  // k = 0 term, m_0 = 1
    for (std::size_t k = 1; k <= order; ++k) {
        sum += d.values[k] / factorial(k) * m.moment(k);
    }
    return sum;
}

double taylor_variance(const DerivativeEvaluations& d, const MomentVector& m,
                       std::size_t order) {
    if (d.values.size() < order + 1) {
        throw std::invalid_argument("taylor_variance: order " + std::to_string(order) +
                                    " exceeds supplied derivatives");
    }
    if (m.order() < 2 * order) {
        throw std::invalid_argument("taylor_variance: needs central moments up to m_" +
                                    std::to_string(2 * order));
    }
    double sum = 0.0;
    for (std::size_t k = 1; k <= order; ++k) {
        const double coeff = d.values[k] / factorial(k);
        const double mk = m.moment(k);
        sum += coeff * coeff * (m.moment(2 * k) - mk * mk);
    }
    return sum;
}

MetricDistribution mse_distribution(const EvaluationSet& set) {
    const double n = static_cast<double>(set.size());
    double mean_sum = 0.0;
    double var_sum = 0.0;
    for (const EvaluationPair& pair : set.pairs()) {
        const double s2 = pair.feedback.variance();
        const double delta = pair.delta();
        const double d2 = delta * delta;
        mean_sum += s2 + d2;
        var_sum += s2 * s2 + 2.0 * s2 * d2;
    }
    return MetricDistribution(mean_sum / n, 2.0 * var_sum / (n * n));
}

MetricDistribution rmse_distribution(const EvaluationSet& set) {
    const MetricDistribution z = mse_distribution(set);
    if (z.mean == 0.0) {
        // Only possible when every sigma and every delta vanish: a perfect
        // deterministic predictor. The RMSE is the point mass at zero.
        return MetricDistribution(0.0, 0.0);
    }
    return MetricDistribution(std::sqrt(z.mean), z.variance / (4.0 * z.mean));
}

}  // namespace probeval

#pragma once

#include <cstdint>
#include <vector>

namespace probeval {

/// Which precision metric a simulation or propagation computes.
enum class Metric { mse, rmse, mae };

/// Gaussian model of one user-item pair's feedback: repeated ratings of the
/// same item scatter around mu with standard deviation sigma. sigma == 0 is
/// a point mass (a rater who always answers the same value).
struct FeedbackModel {
    FeedbackModel(double mu, double sigma);

    double mu;
    double sigma;

    double variance() const noexcept { return sigma * sigma; }
    bool operator==(const FeedbackModel&) const = default;
};

/// One rated pair together with a system's point prediction for it.
struct EvaluationPair {
    FeedbackModel feedback;
    double prediction;

    /// Expected deviation between feedback and prediction. Always computed,
    /// never stored, so it cannot drift out of sync with its inputs.
    double delta() const noexcept { return feedback.mu - prediction; }

    bool operator==(const EvaluationPair&) const = default;
};

/// The unit every metric consumes: N >= 1 feedback models paired with one
/// system's predictions. Immutable after construction.
class EvaluationSet {
  public:
    explicit EvaluationSet(std::vector<EvaluationPair> pairs);

    std::size_t size() const noexcept { return pairs_.size(); }
    const std::vector<EvaluationPair>& pairs() const noexcept { return pairs_; }
    const EvaluationPair& operator[](std::size_t i) const noexcept { return pairs_[i]; }

    bool operator==(const EvaluationSet&) const = default;

  private:
    std::vector<EvaluationPair> pairs_;
};

/// Pairs up models and predictions, validating lengths and finiteness.
/// Errors name the offending index.
EvaluationSet make_evaluation_set(const std::vector<FeedbackModel>& models,
                                  const std::vector<double>& predictions);

/// Gaussian summary of a metric's outcome distribution.
struct MetricDistribution {
    MetricDistribution(double mean, double variance);

    double mean;
    double variance;

    bool operator==(const MetricDistribution&) const = default;
};

/// Monte-Carlo representation of a metric's outcome distribution: tau
/// realizations plus the seed that produced them.
struct EmpiricalDistribution {
    EmpiricalDistribution(std::vector<double> samples, std::uint64_t seed, std::uint64_t tau);

    std::vector<double> samples;
    std::uint64_t seed;
    std::uint64_t tau;

    bool operator==(const EmpiricalDistribution&) const = default;
};

}  // namespace probeval

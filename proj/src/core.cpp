#include "probeval/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace probeval {

FeedbackModel::FeedbackModel(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!std::isfinite(mu) || !std::isfinite(sigma)) {
        throw std::invalid_argument("FeedbackModel: mu and sigma must be finite");
    }
    if (sigma < 0.0) {
        throw std::invalid_argument("FeedbackModel: sigma must be >= 0, got " +
                                    std::to_string(sigma));
    }
}

EvaluationSet::EvaluationSet(std::vector<EvaluationPair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) {
        throw std::invalid_argument("EvaluationSet: needs at least one pair");
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (!std::isfinite(pairs_[i].prediction)) {
            throw std::invalid_argument("EvaluationSet: prediction at index " +
                                        std::to_string(i) + " is not finite");
        }
    }
}

EvaluationSet make_evaluation_set(const std::vector<FeedbackModel>& models,
                                  const std::vector<double>& predictions) {
    if (models.empty() || predictions.empty()) {
        throw std::invalid_argument("make_evaluation_set: empty input");
    }
    if (models.size() != predictions.size()) {
        throw std::invalid_argument("make_evaluation_set: " + std::to_string(models.size()) +
                                    " models vs " + std::to_string(predictions.size()) +
                                    " predictions");
    }
    std::vector<EvaluationPair> pairs;
    pairs.reserve(models.size());
    for (std::size_t i = 0; i < models.size(); ++i) {
        if (!std::isfinite(predictions[i])) {
            throw std::invalid_argument("make_evaluation_set: prediction at index " +
                                        std::to_string(i) + " is not finite");
        }
        pairs.push_back(EvaluationPair{models[i], predictions[i]});
    }
    return EvaluationSet(std::move(pairs));
}

MetricDistribution::MetricDistribution(double mean_, double variance_)
    : mean(mean_), variance(variance_) {
    if (!std::isfinite(mean) || !std::isfinite(variance)) {
        throw std::invalid_argument("MetricDistribution: parameters must be finite");
    }
    if (mean < 0.0) {
        throw std::invalid_argument("MetricDistribution: mean must be >= 0, got " +
                                    std::to_string(mean));
    }
    if (variance < 0.0) {
        throw std::invalid_argument("MetricDistribution: variance must be >= 0, got " +
                                    std::to_string(variance));
    }
}

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples_, std::uint64_t seed_,
                                             std::uint64_t tau_)
    : samples(std::move(samples_)), seed(seed_), tau(tau_) {
    if (samples.size() != tau) {
        throw std::invalid_argument("EmpiricalDistribution: sample count " +
                                    std::to_string(samples.size()) + " does not match tau " +
                                    std::to_string(tau));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i])) {
            throw std::invalid_argument("EmpiricalDistribution: sample at index " +
                                        std::to_string(i) + " is not finite");
        }
    }
}

}  // namespace probeval

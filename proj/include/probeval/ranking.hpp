#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "probeval/core.hpp"
#include "probeval/normal.hpp"

namespace probeval {

/// A system identifier paired with its metric distribution.
struct SystemScore {
    std::string id;
    MetricDistribution dist;
};

/// Probability that a repeated evaluation inverts the ranking of a against
/// b, i.e. P(Z_a >= Z_b) for independent Gaussian metric outcomes:
///   Phi((mu_a - mu_b) / sqrt(var_a + var_b)).
/// With zero total variance the comparison is deterministic: 0 if
/// mu_a < mu_b, 1 if mu_a > mu_b, 0.5 on a tie.
double error_probability(const MetricDistribution& a, const MetricDistribution& b);

/// Systems ordered by ascending metric mean (ties by identifier) with the
/// full pairwise error-probability matrix. Matrix indices follow `order`.
class RankingReport {
  public:
    RankingReport(std::vector<std::string> order, std::vector<double> error_matrix,
                  double p_max);

    const std::vector<std::string>& order() const noexcept { return order_; }
    std::size_t systems() const noexcept { return order_.size(); }
    double p_max() const noexcept { return p_max_; }

    /// P(Z_order[i] >= Z_order[j]).
    double error(std::size_t i, std::size_t j) const {
        return error_matrix_[i * order_.size() + j];
    }

    /// Whether the pair's better-ranked side wins with error below p_max.
    bool distinguishable(std::size_t i, std::size_t j) const;

  private:
    std::vector<std::string> order_;
    std::vector<double> error_matrix_;  // row-major, diagonal 0.5
    double p_max_;
};

/// Ranks >= 2 systems at distinguishability threshold p_max in (0, 1).
/// Duplicate identifiers are an error.
RankingReport rank_systems(std::vector<SystemScore> systems, double p_max);

/// How often each ranking permutation occurred over repeated evaluations.
struct RankingFrequency {
    std::map<std::vector<std::string>, std::uint64_t> counts;
    std::uint64_t trials = 0;
};

/// Sorts systems per trial by ascending score (ties by identifier) and
/// counts the resulting permutations. scores[t][s] is system s's score in
/// trial t; rows must all have ids.size() entries.
RankingFrequency ranking_frequencies(const std::vector<std::vector<double>>& scores,
                                     const std::vector<std::string>& ids);

}  // namespace probeval

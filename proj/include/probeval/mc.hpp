#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "probeval/core.hpp"
#include "probeval/rng.hpp"

namespace probeval {

/// Discretized probability distribution: edges.size() == mass.size() + 1,
/// edges strictly ascending, mass normalized to 1.
struct Histogram {
    Histogram(std::vector<double> edges, std::vector<double> mass);

    std::vector<double> edges;
    std::vector<double> mass;

    std::size_t bins() const noexcept { return mass.size(); }
    bool operator==(const Histogram&) const = default;
};

/// One pseudo-random outcome of a feedback distribution, via the inverse-CDF
/// transform of a single uniform draw. Consumes exactly one uniform even for
/// sigma == 0 (where it returns mu exactly), so that draw sequences stay
/// aligned across models.
double sample_outcome(const FeedbackModel& model, SplitMix64& rng);

/// One complete Monte-Carlo trial: draws one outcome per pair from the
/// trial's own RNG stream and applies the metric formula.
double metric_trial(const EvaluationSet& set, Metric metric, SplitMix64& rng);

/// tau independent metric realizations. Trial t draws from a stream seeded
/// by trial_seed(seed, t), so the result is a pure function of
/// (set, metric, tau, seed) for any worker count. threads == 0 uses the
/// OpenMP default; the serial variant is the reference implementation the
/// parallel one must match bit for bit.
EmpiricalDistribution simulate_metric(const EvaluationSet& set, Metric metric, std::uint64_t tau,
                                      std::uint64_t seed, int threads = 0);
EmpiricalDistribution simulate_metric_serial(const EvaluationSet& set, Metric metric,
                                             std::uint64_t tau, std::uint64_t seed);

/// Maximum-likelihood Gaussian fit: sample mean and biased variance
/// (divide by tau). Needs at least two samples.
MetricDistribution fit_gaussian(const EmpiricalDistribution& samples);

/// Equal-width histogram spanning [min, max] of the samples, right edge
/// inclusive in the last bin. Identical samples degenerate to a single
/// unit-width bin centered on the common value.
Histogram to_histogram(const EmpiricalDistribution& samples, std::size_t bins);

/// Histogram of samples on a caller-supplied grid; values outside the grid
/// are clamped into the boundary bins so no mass is dropped.
Histogram histogram_on_edges(std::span<const double> samples, std::vector<double> edges);

}  // namespace probeval

#include "probeval/mc.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "probeval/normal.hpp"

namespace probeval {

Histogram::Histogram(std::vector<double> edges_, std::vector<double> mass_)
    : edges(std::move(edges_)), mass(std::move(mass_)) {
    if (edges.size() != mass.size() + 1 || mass.empty()) {
        throw std::invalid_argument("Histogram: needs edges.size() == mass.size() + 1 >= 2");
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] < edges[i + 1])) {
            throw std::invalid_argument("Histogram: edges must be strictly ascending");
        }
    }
    double total = 0.0;
    for (double m : mass) {
        if (!(m >= 0.0)) {
            throw std::invalid_argument("Histogram: mass entries must be >= 0");
        }
        total += m;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("Histogram: mass must sum to 1, got " +
                                    std::to_string(total));
    }
}

double sample_outcome(const FeedbackModel& model, SplitMix64& rng) {
    const double u = rng.next_uniform();
    if (model.sigma == 0.0) return model.mu;
    return model.mu + model.sigma * std_normal_quantile(u);
}

double metric_trial(const EvaluationSet& set, Metric metric, SplitMix64& rng) {
    double acc = 0.0;
    for (const EvaluationPair& pair : set.pairs()) {
        const double d = sample_outcome(pair.feedback, rng) - pair.prediction;
        acc += metric == Metric::mae ? std::fabs(d) : d * d;
    }
    acc /= static_cast<double>(set.size());
    return metric == Metric::rmse ? std::sqrt(acc) : acc;
}

namespace {

std::vector<double> run_trials(const EvaluationSet& set, Metric metric, std::uint64_t tau,
                               std::uint64_t seed, int threads) {
    if (tau == 0) {
        throw std::invalid_argument("simulate_metric: tau must be >= 1");
    }
    std::vector<double> samples(tau);
    const auto n = static_cast<std::int64_t>(tau);
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t t = 0; t < n; ++t) {
        SplitMix64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        samples[static_cast<std::size_t>(t)] = metric_trial(set, metric, rng);
    }
#else
    (void)threads;
    for (std::int64_t t = 0; t < n; ++t) {
        SplitMix64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        samples[static_cast<std::size_t>(t)] = metric_trial(set, metric, rng);
    }
#endif
    return samples;
}

}  // namespace

EmpiricalDistribution simulate_metric(const EvaluationSet& set, Metric metric, std::uint64_t tau,
                                      std::uint64_t seed, int threads) {
    return EmpiricalDistribution(run_trials(set, metric, tau, seed, threads), seed, tau);
}

EmpiricalDistribution simulate_metric_serial(const EvaluationSet& set, Metric metric,
                                             std::uint64_t tau, std::uint64_t seed) {
    if (tau == 0) {
        throw std::invalid_argument("simulate_metric: tau must be >= 1");
    }
    std::vector<double> samples(tau);
    for (std::uint64_t t = 0; t < tau; ++t) {
        SplitMix64 rng(trial_seed(seed, t));
        samples[t] = metric_trial(set, metric, rng);
    }
    return EmpiricalDistribution(std::move(samples), seed, tau);
}

MetricDistribution fit_gaussian(const EmpiricalDistribution& dist) {
    if (dist.tau < 2) {
        throw std::invalid_argument("fit_gaussian: needs at least 2 samples");
    }
    const double n = static_cast<double>(dist.tau);
    double mean = 0.0;
    for (double x : dist.samples) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : dist.samples) {
        const double d = x - mean;
        ss += d * d;
    }
    return MetricDistribution(mean, ss / n);
}

Histogram to_histogram(const EmpiricalDistribution& dist, std::size_t bins) {
    if (bins < 2) {
        throw std::invalid_argument("to_histogram: needs at least 2 bins");
    }
    const auto [lo_it, hi_it] = std::minmax_element(dist.samples.begin(), dist.samples.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo == hi) {
        // Zero-width support: a single bin around the common value.
        return Histogram({lo - 0.5, lo + 0.5}, {1.0});
    }
    std::vector<double> edges(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    }
    edges.front() = lo;
    edges.back() = hi;
    return histogram_on_edges(dist.samples, std::move(edges));
}

Histogram histogram_on_edges(std::span<const double> samples, std::vector<double> edges) {
    if (samples.empty()) {
        throw std::invalid_argument("histogram_on_edges: no samples");
    }
    if (edges.size() < 2) {
        throw std::invalid_argument("histogram_on_edges: needs at least one bin");
    }
    const std::size_t bins = edges.size() - 1;
    std::vector<double> counts(bins, 0.0);
    for (double x : samples) {
        // Bin i covers [edges[i], edges[i+1]); out-of-range values land in
        // the boundary bins, which also makes the last right edge inclusive.
        auto it = std::upper_bound(edges.begin(), edges.end(), x);
        auto idx = static_cast<std::int64_t>(it - edges.begin()) - 1;
        idx = std::clamp<std::int64_t>(idx, 0, static_cast<std::int64_t>(bins) - 1);
        counts[static_cast<std::size_t>(idx)] += 1.0;
    }
    const double total = static_cast<double>(samples.size());
    for (double& c : counts) c /= total;
    return Histogram(std::move(edges), std::move(counts));
}

}  // namespace probeval

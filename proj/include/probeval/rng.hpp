#pragma once

#include <cstdint>

namespace probeval {

/// SplitMix64 finalizer; bijective avalanche on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Small, fast, reproducible generator (SplitMix64). One instance per
/// logical stream; never shared between workers.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw on the open interval (0, 1): (k + 0.5) / 2^53,
    /// so downstream inverse-CDF transforms never see 0 or 1.
    constexpr double next_uniform() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform draw on [lo, hi].
    constexpr double next_uniform(double lo, double hi) noexcept {
        return lo + next_uniform() * (hi - lo);
    }

  private:
    std::uint64_t state_;
};

/// Derives an independent child seed from (seed, stream, index).
/// Used for per-trial and per-grid-point sub-streams so that results do not
/// depend on execution order or worker count.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                           std::uint64_t index = 0) noexcept {
    return mix64(mix64(mix64(seed) ^ mix64(stream)) ^ mix64(~index));
}

/// Seed of the RNG stream owned by one Monte-Carlo trial. Shared by every
/// simulation engine so that metrics simulated from the same (seed, trial)
/// see the same outcome draws.
inline constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
    return derive_seed(seed, 0x747269616cULL, trial);
}

}  // namespace probeval

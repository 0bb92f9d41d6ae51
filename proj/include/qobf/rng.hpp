#pragma once

#include <cstdint>

namespace qobf {

/// Counter-based deterministic generator (splitmix64 finalizer over a seed
/// and an incrementing counter). Output depends only on (seed, draw index),
/// so results are reproducible regardless of threading.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_double();

    /// Uniform in [0, bound), bias-free via rejection.
    std::uint64_t next_below(std::uint64_t bound);

    /// Independent seed for a sub-stream (trial index, pipeline stage, ...).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace qobf

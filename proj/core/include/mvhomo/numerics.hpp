#pragma once

#include <cstdint>
#include <span>

namespace mvhomo {

// Deterministic pairwise (tree) summation. This is the normative reduction
// order for every loss/mean in the library, so results are bit-identical
// regardless of how callers might split work.
double pairwise_sum(std::span<const double> values);

// SplitMix64, the normative 64-bit splittable PRNG for all synthetic data.
// Reference constants from Steele et al.'s splittable-generator construction;
// the stream for a given seed is fixed forever.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next();

    // Uniform double in [0, 1) with 53 random bits.
    double uniform();

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    // Integer in [0, n); n must be > 0.
    uint64_t next_below(uint64_t n);

    // Standard normal via Box-Muller (consumes two uniforms per call).
    double gaussian();

    // Independent child generator, seeded from this stream.
    SplitMix64 split();

private:
    uint64_t state_;
};

} // namespace mvhomo

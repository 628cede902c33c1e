#pragma once
// Geometric-gap sampling: each potential update is processed with marginal
// probability p, but the PRNG is consulted only once per processed update.
// The number of potential updates to skip is drawn from the geometric
// distribution on {1, 2, ...} with mean 1/p, at construction and again
// after every processed update.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "sketchbench/estimator.hpp"
#include "sketchbench/hashing.hpp"

namespace sketchbench {

// Uniform double in (0, 1], 53 bits, built directly from the generator so
// the sequence is identical on every platform.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

class SkipSampler {
public:
    SkipSampler(double p, Seed seed)
        : p_(p), log1mp_(0.0), rng_(seed) {
        if (!(p > 0.0) || p > 1.0) {
            throw std::invalid_argument("SkipSampler: p must be in (0, 1]");
        }
        if (p_ < 1.0) {
            log1mp_ = std::log1p(-p_);
        }
        gap_ = draw_gap();
    }

    double p() const noexcept { return p_; }

    // Consumes one potential update. True exactly when the gap reaches
    // zero; a fresh gap is drawn immediately on that path only.
    bool should_process() {
        if (--gap_ == 0) {
            gap_ = draw_gap();
            return true;
        }
        return false;
    }

    // PRNG invocations so far (0 forever when p == 1).
    std::uint64_t prng_draws() const noexcept { return draws_; }

private:
    std::uint64_t draw_gap() {
        if (p_ == 1.0) {
            return 1;  // degenerate: every update processed, no PRNG call
        }
        ++draws_;
        // Inverse transform: G = ceil(ln(U) / ln(1-p)), U in (0,1].
        double g = std::ceil(std::log(uniform_unit(rng_)) / log1mp_);
        if (g < 1.0) {
            return 1;
        }
        if (g >= 9.2e18) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        return static_cast<std::uint64_t>(g);
    }

    double p_;
    double log1mp_;
    std::mt19937_64 rng_;
    std::uint64_t gap_ = 0;
    std::uint64_t draws_ = 0;
};

// Query-time scaling for sampled counters: a raw count of sampled
// occurrences estimates raw/p true occurrences.
inline Estimate scale_estimate(std::uint64_t raw, double p) {
    return static_cast<double>(raw) / p;
}

}  // namespace sketchbench

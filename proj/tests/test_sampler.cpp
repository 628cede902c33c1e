#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sketchbench/skip_sampler.hpp"

using sketchbench::scale_estimate;
using sketchbench::SkipSampler;

TEST_CASE("p = 1 processes everything without touching the prng") {
    SkipSampler sampler(1.0, 42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(sampler.should_process());
    }
    CHECK(sampler.prng_draws() == 0);
}

TEST_CASE("out-of-range p is rejected") {
    CHECK_THROWS_AS(SkipSampler(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(SkipSampler(-0.25, 1), std::invalid_argument);
    CHECK_THROWS_AS(SkipSampler(1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(SkipSampler(std::nan(""), 1), std::invalid_argument);
}

TEST_CASE("marginal processing rate matches p") {
    SkipSampler sampler(0.25, 7);
    const std::uint64_t calls = 1000000;
    std::uint64_t processed = 0;
    for (std::uint64_t i = 0; i < calls; ++i) {
        if (sampler.should_process()) {
            ++processed;
        }
    }
    // Binomial(10^6, 0.25): sd ~ 433, so +-2500 is beyond 5 sigma.
    CHECK(processed > 247500);
    CHECK(processed < 252500);
}

TEST_CASE("one prng draw per processed update plus the initial gap") {
    SkipSampler sampler(0.1, 99);
    std::uint64_t processed = 0;
    for (int i = 0; i < 50000; ++i) {
        if (sampler.should_process()) {
            ++processed;
        }
    }
    CHECK(sampler.prng_draws() == processed + 1);
}

TEST_CASE("gaps follow the geometric law") {
    // Gap = number of calls from one processed update to the next,
    // inclusive. P(gap = k) = p (1-p)^(k-1).
    const double p = 0.25;
    SkipSampler sampler(p, 1234);
    const std::uint64_t wanted = 1000000;
    std::vector<std::uint64_t> gaps;
    gaps.reserve(wanted);
    std::uint64_t since_last = 0;
    while (gaps.size() < wanted) {
        ++since_last;
        if (sampler.should_process()) {
            gaps.push_back(since_last);
            since_last = 0;
        }
    }

    double mean = 0.0;
    for (const std::uint64_t g : gaps) {
        mean += static_cast<double>(g);
    }
    mean /= static_cast<double>(wanted);
    CHECK(mean == doctest::Approx(1.0 / p).epsilon(0.005));

    std::uint64_t threes = 0;
    for (const std::uint64_t g : gaps) {
        if (g == 3) {
            ++threes;
        }
    }
    const double p3 = static_cast<double>(threes) / static_cast<double>(wanted);
    CHECK(std::fabs(p3 - 0.140625) < 0.003);

    // Chi-square over bins 1..15 plus a >=16 tail, 15 degrees of freedom;
    // 30.578 is the 0.99 quantile.
    std::vector<double> observed(16, 0.0);
    for (const std::uint64_t g : gaps) {
        const std::size_t bin = g >= 16 ? 15 : static_cast<std::size_t>(g - 1);
        observed[bin] += 1.0;
    }
    double chi2 = 0.0;
    for (std::size_t bin = 0; bin < 16; ++bin) {
        const double prob = bin == 15 ? std::pow(1.0 - p, 15)
                                      : p * std::pow(1.0 - p, static_cast<double>(bin));
        const double expected = prob * static_cast<double>(wanted);
        const double diff = observed[bin] - expected;
        chi2 += diff * diff / expected;
    }
    CHECK(chi2 < 30.578);
}

TEST_CASE("identical seeds give identical decision streams") {
    SkipSampler a(0.05, 31337);
    SkipSampler b(0.05, 31337);
    for (int i = 0; i < 20000; ++i) {
        CHECK(a.should_process() == b.should_process());
    }
}

TEST_CASE("scaling divides by p") {
    CHECK(scale_estimate(5, 0.01) == 500.0);
    CHECK(scale_estimate(0, 0.01) == 0.0);
    CHECK(scale_estimate(7, 1.0) == 7.0);
}

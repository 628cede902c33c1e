#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "sketchbench/cuckoo.hpp"
#include "sketchbench/ground_truth.hpp"
#include "sketchbench/trace.hpp"

using namespace sketchbench;

namespace {

CuckooConfig config_for(std::uint64_t capacity, CuckooMode mode = CuckooMode::exact,
                        double p = 1.0, std::uint32_t fp_bits = 64) {
    CuckooConfig config;
    config.capacity = capacity;
    config.mode = mode;
    config.p = p;
    config.fingerprint_bits = fp_bits;
    return config;
}

}  // namespace

TEST_CASE("bucket count is a power of two and covers the capacity") {
    const CuckooEstimator est(config_for(1000), 3);
    CHECK((est.bucket_count() & (est.bucket_count() - 1)) == 0);
    CHECK(est.slot_count() >= 1000);
    CHECK(est.slots_per_bucket() == 4);
}

TEST_CASE("the alternate-index map is an involution") {
    const CuckooEstimator est(config_for(4096), 7);
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const FlowKey key = FlowKey::from_uint(i);
        const auto [i1, i2] = est.index_pair(key);
        const std::uint64_t fp = est.fingerprint(key);
        CHECK(i1 < est.bucket_count());
        CHECK(i2 < est.bucket_count());
        CHECK(est.alt_index(i1, fp) == i2);
        CHECK(est.alt_index(i2, fp) == i1);
    }
}

TEST_CASE("fingerprints avoid the free-slot marker") {
    const CuckooEstimator est(config_for(64, CuckooMode::exact, 1.0, 1), 5);
    for (std::uint64_t i = 0; i < 10000; ++i) {
        CHECK(est.fingerprint(FlowKey::from_uint(i)) != 0);
    }
}

TEST_CASE("counts are exact at comfortable load") {
    CuckooEstimator est(config_for(4096), 11);
    GroundTruth truth;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const FlowKey key = FlowKey::from_uint(i);
        const int reps = 1 + static_cast<int>(i % 3);
        for (int r = 0; r < reps; ++r) {
            est.record(key);
            truth.record(key);
        }
    }
    for (const auto& [key, count] : truth.counts()) {
        CHECK(est.estimate(key) == static_cast<double>(count));
    }
    CHECK(est.drops() == 0);
    CHECK(est.stored_items() == 1000);
    CHECK(est.total_count() == truth.total());
    CHECK(est.estimate(FlowKey("absent-key")) == 0.0);
}

TEST_CASE("mass is conserved through eviction failures") {
    CuckooEstimator est(config_for(64), 13);
    std::uint64_t recorded = 0;
    for (std::uint64_t i = 0; i < 400; ++i) {
        est.record(FlowKey::from_uint(i));
        ++recorded;
    }
    CHECK(est.drops() > 0);
    CHECK(est.total_count() + est.dropped_mass() == recorded);
    CHECK(est.stored_items() <= est.slot_count());
}

TEST_CASE("memory accounting charges twelve bytes per slot") {
    const CuckooEstimator est(config_for(4096), 17);
    CHECK(est.slot_count() == 4096);
    CHECK(est.memory_bytes() == 4096 * 12);

    CuckooEstimator filled(config_for(256), 19);
    for (std::uint64_t i = 0; i < 100; ++i) {
        filled.record(FlowKey::from_uint(i));
    }
    CHECK(filled.stored_bytes() == filled.stored_items().value() * 12);
}

TEST_CASE("sampled mode scales by 1/p") {
    CuckooEstimator est(config_for(1024, CuckooMode::nitro, 0.5), 23);
    const FlowKey x("x");
    for (int i = 0; i < 1000; ++i) {
        est.record(x);
    }
    const double e = est.estimate(x);
    CHECK(e > 850.0);
    CHECK(e < 1150.0);
    CHECK(est.name() == "nitrocuckoo");
}

TEST_CASE("the small variant shrinks the table by the sampling factor") {
    const CuckooEstimator nitro(config_for(10000, CuckooMode::nitro, 0.01), 29);
    const CuckooEstimator small(config_for(10000, CuckooMode::small, 0.01), 29);
    // 10000 * 0.01 = 100 expected sampled keys: 32 buckets of 4 slots.
    CHECK(small.slot_count() == 128);
    CHECK(nitro.slot_count() == 16384);
    CHECK(small.name() == "nc_small");
}

TEST_CASE("identical seeds give identical tables") {
    const Trace trace = Trace::zipf({20000, 3000, 1.0, 31});
    CuckooEstimator a(config_for(4096, CuckooMode::nitro, 0.1), 555);
    CuckooEstimator b(config_for(4096, CuckooMode::nitro, 0.1), 555);
    for (const FlowKey& key : trace.items()) {
        a.record(key);
        b.record(key);
    }
    for (std::uint64_t k = 1; k <= 3000; ++k) {
        const FlowKey key = FlowKey::from_uint(k);
        CHECK(a.estimate(key) == b.estimate(key));
    }
    CHECK(a.drops() == b.drops());
}

TEST_CASE("invalid configurations are rejected") {
    CHECK_THROWS_AS(CuckooEstimator(config_for(0), 1), std::invalid_argument);
    CHECK_THROWS_AS(CuckooEstimator(config_for(16, CuckooMode::exact, 1.0, 0), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(CuckooEstimator(config_for(16, CuckooMode::exact, 1.0, 65), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(CuckooEstimator(config_for(16, CuckooMode::nitro, 0.0), 1),
                    std::invalid_argument);
}

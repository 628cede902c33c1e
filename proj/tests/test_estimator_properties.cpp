#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sketchbench/bench.hpp"
#include "sketchbench/trace.hpp"

using namespace sketchbench;

// Contract checks every estimator must satisfy, run across the whole
// roster through the same factory the harness uses.

namespace {

const Trace& shared_trace() {
    static const Trace trace = Trace::zipf({30000, 2000, 1.0, 404});
    return trace;
}

std::vector<FlowKey> probe_keys() {
    std::vector<FlowKey> probes;
    for (std::uint64_t k = 1; k <= 2000; k += 7) {
        probes.push_back(FlowKey::from_uint(k));
    }
    probes.push_back(FlowKey("never-recorded-anywhere"));
    return probes;
}

std::unique_ptr<FrequencyEstimator> build(Algorithm algo, Seed seed) {
    BenchConfig cfg;
    cfg.algorithm = algo;
    cfg.p = 0.05;
    return make_estimator(cfg, shared_trace().stats().n_items, seed);
}

}  // namespace

TEST_CASE("estimates are non-negative and queries are pure") {
    for (const Algorithm algo : all_algorithms()) {
        CAPTURE(to_string(algo));
        const auto est = build(algo, 2024);
        for (const FlowKey& key : shared_trace().items()) {
            est->record(key);
        }
        for (const FlowKey& probe : probe_keys()) {
            const double first = est->estimate(probe);
            CHECK(first >= 0.0);
            // Asking again, in between other queries, changes nothing.
            est->estimate(FlowKey("interleaved-query"));
            CHECK(est->estimate(probe) == first);
        }
    }
}

TEST_CASE("same seed, same stream, same answers") {
    for (const Algorithm algo : all_algorithms()) {
        CAPTURE(to_string(algo));
        const auto a = build(algo, 99);
        const auto b = build(algo, 99);
        for (const FlowKey& key : shared_trace().items()) {
            a->record(key);
            b->record(key);
        }
        for (const FlowKey& probe : probe_keys()) {
            CHECK(a->estimate(probe) == b->estimate(probe));
        }
        CHECK(a->drops() == b->drops());
        CHECK(a->memory_bytes() == b->memory_bytes());
    }
}

TEST_CASE("memory accounting is positive and stable across a run") {
    for (const Algorithm algo : all_algorithms()) {
        CAPTURE(to_string(algo));
        const auto est = build(algo, 7);
        const bool fixed_size = !est->stored_items().has_value();
        const std::uint64_t before = est->memory_bytes();
        CHECK(before > 0);
        for (const FlowKey& key : shared_trace().items()) {
            est->record(key);
        }
        if (fixed_size) {
            CHECK(est->memory_bytes() == before);  // sketches never grow
        } else {
            CHECK(est->memory_bytes() >= before);
        }
    }
}

TEST_CASE("estimates of recorded keys are positive for exact structures") {
    // Sampling may legitimately miss rare keys, so this is asserted only
    // for the always-on structures.
    for (const Algorithm algo : {Algorithm::hash, Algorithm::cms, Algorithm::cms_nomi,
                                 Algorithm::cuckoo, Algorithm::spacesaving}) {
        CAPTURE(to_string(algo));
        const auto est = build(algo, 5);
        for (const FlowKey& key : shared_trace().items()) {
            est->record(key);
        }
        for (const FlowKey& key : shared_trace().items()) {
            CHECK(est->estimate(key) >= 1.0);
        }
    }
}

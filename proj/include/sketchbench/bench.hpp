#pragma once
// Benchmark harness: builds estimators by name, repeats seeded runs, and
// aggregates per-run figures into CSV rows with normal-approximation
// confidence intervals.
//
// Throughput protocols time only the tight loop over resident trace
// items:
//   write_only - one record per item,
//   write_read - record then query per item,
//   read_only  - untimed full record pass, then a timed query pass.
// Accuracy runs the three error-metric schedules on fresh estimators;
// memory reports the table footprint after a write pass. Run r always
// uses seed base_seed + r, so any cell can be reproduced in isolation.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sketchbench/estimator.hpp"
#include "sketchbench/hashing.hpp"
#include "sketchbench/trace.hpp"

namespace sketchbench {

enum class Algorithm {
    hash,
    nitrohash,
    cms,
    cms_nomi,
    nitrocms,
    cuckoo,
    nitrocuckoo,
    nc_small,
    spacesaving,
    spacesaving_rap,
};

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_string(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

struct BenchConfig {
    Algorithm algorithm = Algorithm::hash;
    double p = 0.01;            // nitro variants
    double epsilon = 0.01;      // CMS width, Space Saving budget
    double delta = 0.01;        // CMS depth
    std::uint32_t runs = 13;
    Seed base_seed = 1;
    std::optional<std::uint64_t> capacity;  // cuckoo family; defaults to trace length
    bool warmup = true;
};

// default_capacity stands in when cfg.capacity is unset (the harness
// passes the trace's item count).
std::unique_ptr<FrequencyEstimator> make_estimator(const BenchConfig& cfg,
                                                   std::uint64_t default_capacity,
                                                   Seed seed);

struct Aggregate {
    double mean;
    double ci95;  // half-width, 1.96 * sample stddev / sqrt(runs)
};

Aggregate aggregate(const std::vector<double>& values);

struct BenchRow {
    std::string algorithm;
    std::string trace;
    std::string protocol;
    std::string metric;
    double mean = 0.0;
    double ci95 = 0.0;
    std::uint32_t runs = 0;
    std::string units;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    void merge(BenchReport other);
    void sort_rows();  // algorithm, protocol, metric, trace lexicographic
    std::string to_csv() const;
};

enum class ThroughputProtocol { write_only, write_read, read_only };

const char* throughput_protocol_name(ThroughputProtocol protocol);
std::optional<ThroughputProtocol> throughput_protocol_from_string(std::string_view name);

BenchReport run_throughput(const BenchConfig& cfg, const Trace& trace,
                           ThroughputProtocol protocol);
BenchReport run_accuracy(const BenchConfig& cfg, const Trace& trace);
BenchReport run_memory(const BenchConfig& cfg, const Trace& trace);

}  // namespace sketchbench

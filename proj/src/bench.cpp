#include "sketchbench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "sketchbench/cms.hpp"
#include "sketchbench/cuckoo.hpp"
#include "sketchbench/hash_estimator.hpp"
#include "sketchbench/metrics.hpp"
#include "sketchbench/space_saving.hpp"

namespace sketchbench {

namespace {

struct AlgorithmName {
    Algorithm algorithm;
    std::string_view name;
};

constexpr AlgorithmName kAlgorithmNames[] = {
    {Algorithm::hash, "hash"},
    {Algorithm::nitrohash, "nitrohash"},
    {Algorithm::cms, "cms"},
    {Algorithm::cms_nomi, "cms_nomi"},
    {Algorithm::nitrocms, "nitrocms"},
    {Algorithm::cuckoo, "cuckoo"},
    {Algorithm::nitrocuckoo, "nitrocuckoo"},
    {Algorithm::nc_small, "nc_small"},
    {Algorithm::spacesaving, "spacesaving"},
    {Algorithm::spacesaving_rap, "spacesaving_rap"},
};

// Query loops fold their estimates into this sink so the optimizer
// cannot discard them.
volatile double g_query_sink = 0.0;

double elapsed_seconds(std::chrono::steady_clock::time_point start,
                       std::chrono::steady_clock::time_point stop) {
    const auto ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    return ns <= 0 ? 1e-9 : static_cast<double>(ns) * 1e-9;
}

double format_guard(double value) {
    // CSV carries finite numbers only; anything else is a harness bug.
    if (!std::isfinite(value)) {
        throw std::logic_error("bench: non-finite value in report");
    }
    return value;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
    for (const auto& entry : kAlgorithmNames) {
        if (entry.algorithm == algorithm) {
            return entry.name;
        }
    }
    return "hash";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
    for (const auto& entry : kAlgorithmNames) {
        if (entry.name == name) {
            return entry.algorithm;
        }
    }
    return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all = [] {
        std::vector<Algorithm> v;
        for (const auto& entry : kAlgorithmNames) {
            v.push_back(entry.algorithm);
        }
        return v;
    }();
    return all;
}

std::unique_ptr<FrequencyEstimator> make_estimator(const BenchConfig& cfg,
                                                   std::uint64_t default_capacity,
                                                   Seed seed) {
    const std::uint64_t capacity = cfg.capacity.value_or(default_capacity);
    switch (cfg.algorithm) {
    case Algorithm::hash:
        return std::make_unique<HashEstimator>(seed);
    case Algorithm::nitrohash:
        return std::make_unique<HashEstimator>(cfg.p, seed);
    case Algorithm::cms:
        return std::make_unique<CmsEstimator>(
            CmsConfig::from_error_bounds(cfg.epsilon, cfg.delta, CmsMode::conservative),
            seed);
    case Algorithm::cms_nomi:
        return std::make_unique<CmsEstimator>(
            CmsConfig::from_error_bounds(cfg.epsilon, cfg.delta, CmsMode::plain), seed);
    case Algorithm::nitrocms:
        return std::make_unique<CmsEstimator>(
            CmsConfig::from_error_bounds(cfg.epsilon, cfg.delta, CmsMode::nitro, cfg.p),
            seed);
    case Algorithm::cuckoo: {
        CuckooConfig config;
        config.capacity = capacity;
        config.mode = CuckooMode::exact;
        return std::make_unique<CuckooEstimator>(config, seed);
    }
    case Algorithm::nitrocuckoo: {
        CuckooConfig config;
        config.capacity = capacity;
        config.mode = CuckooMode::nitro;
        config.p = cfg.p;
        return std::make_unique<CuckooEstimator>(config, seed);
    }
    case Algorithm::nc_small: {
        CuckooConfig config;
        config.capacity = capacity;
        config.mode = CuckooMode::small;
        config.p = cfg.p;
        return std::make_unique<CuckooEstimator>(config, seed);
    }
    case Algorithm::spacesaving:
        return std::make_unique<SpaceSavingEstimator>(
            SpaceSavingEstimator::budget_from_epsilon(cfg.epsilon),
            SpaceSavingMode::plain, seed);
    case Algorithm::spacesaving_rap:
        return std::make_unique<SpaceSavingEstimator>(
            SpaceSavingEstimator::budget_from_epsilon(cfg.epsilon),
            SpaceSavingMode::rap, seed);
    }
    throw std::invalid_argument("make_estimator: unknown algorithm");
}

Aggregate aggregate(const std::vector<double>& values) {
    if (values.empty()) {
        throw std::invalid_argument("aggregate: no values");
    }
    double sum = 0.0;
    for (const double v : values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(values.size());
    if (values.size() == 1) {
        return Aggregate{mean, 0.0};
    }
    double sq = 0.0;
    for (const double v : values) {
        const double d = v - mean;
        sq += d * d;
    }
    const double stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    return Aggregate{mean, 1.96 * stddev / std::sqrt(static_cast<double>(values.size()))};
}

void BenchReport::merge(BenchReport other) {
    rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
                std::make_move_iterator(other.rows.end()));
}

void BenchReport::sort_rows() {
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.algorithm, a.protocol, a.metric, a.trace) <
               std::tie(b.algorithm, b.protocol, b.metric, b.trace);
    });
}

std::string BenchReport::to_csv() const {
    std::string out =
        "# ci95 = 1.96 * sample_stddev / sqrt(runs); prng = mt19937_64\n"
        "algorithm,trace,protocol,metric,mean,ci95,runs,units\n";
    char buffer[64];
    for (const BenchRow& row : rows) {
        out += row.algorithm;
        out += ',';
        out += row.trace;
        out += ',';
        out += row.protocol;
        out += ',';
        out += row.metric;
        out += ',';
        std::snprintf(buffer, sizeof(buffer), "%.9g", format_guard(row.mean));
        out += buffer;
        out += ',';
        std::snprintf(buffer, sizeof(buffer), "%.9g", format_guard(row.ci95));
        out += buffer;
        out += ',';
        out += std::to_string(row.runs);
        out += ',';
        out += row.units;
        out += '\n';
    }
    return out;
}

const char* throughput_protocol_name(ThroughputProtocol protocol) {
    switch (protocol) {
    case ThroughputProtocol::write_only: return "write_only";
    case ThroughputProtocol::write_read: return "write_read";
    case ThroughputProtocol::read_only: return "read_only";
    }
    return "write_only";
}

std::optional<ThroughputProtocol> throughput_protocol_from_string(std::string_view name) {
    if (name == "write_only") return ThroughputProtocol::write_only;
    if (name == "write_read") return ThroughputProtocol::write_read;
    if (name == "read_only") return ThroughputProtocol::read_only;
    return std::nullopt;
}

namespace {

// One timed pass. The estimator is built and the trace is resident
// before the clock starts; nothing but record/estimate calls sit inside
// the timed region.
double timed_run(const BenchConfig& cfg, const Trace& trace,
                 ThroughputProtocol protocol, Seed seed, std::uint64_t* drops_out) {
    auto estimator = make_estimator(cfg, trace.stats().n_items, seed);
    const std::vector<FlowKey>& items = trace.items();
    double sink = 0.0;
    std::chrono::steady_clock::time_point start;
    std::chrono::steady_clock::time_point stop;

    switch (protocol) {
    case ThroughputProtocol::write_only:
        start = std::chrono::steady_clock::now();
        for (const FlowKey& key : items) {
            estimator->record(key);
        }
        stop = std::chrono::steady_clock::now();
        break;
    case ThroughputProtocol::write_read:
        start = std::chrono::steady_clock::now();
        for (const FlowKey& key : items) {
            estimator->record(key);
            sink += estimator->estimate(key);
        }
        stop = std::chrono::steady_clock::now();
        break;
    case ThroughputProtocol::read_only:
        for (const FlowKey& key : items) {
            estimator->record(key);
        }
        start = std::chrono::steady_clock::now();
        for (const FlowKey& key : items) {
            sink += estimator->estimate(key);
        }
        stop = std::chrono::steady_clock::now();
        break;
    }

    g_query_sink = g_query_sink + sink;
    if (drops_out != nullptr) {
        *drops_out = estimator->drops();
    }
    return static_cast<double>(items.size()) / elapsed_seconds(start, stop);
}

}  // namespace

BenchReport run_throughput(const BenchConfig& cfg, const Trace& trace,
                           ThroughputProtocol protocol) {
    if (cfg.runs == 0) {
        throw std::invalid_argument("run_throughput: runs must be >= 1");
    }
    if (cfg.warmup) {
        timed_run(cfg, trace, protocol, cfg.base_seed, nullptr);
    }
    std::vector<double> throughputs;
    std::vector<double> drops;
    throughputs.reserve(cfg.runs);
    drops.reserve(cfg.runs);
    for (std::uint32_t r = 0; r < cfg.runs; ++r) {
        std::uint64_t run_drops = 0;
        throughputs.push_back(timed_run(cfg, trace, protocol, cfg.base_seed + r, &run_drops));
        drops.push_back(static_cast<double>(run_drops));
    }

    const std::string algorithm{to_string(cfg.algorithm)};
    const char* proto = throughput_protocol_name(protocol);
    const Aggregate tp = aggregate(throughputs);
    const Aggregate dr = aggregate(drops);
    BenchReport report;
    report.rows.push_back(BenchRow{algorithm, trace.label(), proto, "throughput",
                                   tp.mean, tp.ci95, cfg.runs, "ops/sec"});
    report.rows.push_back(
        BenchRow{algorithm, trace.label(), proto, "drops", dr.mean, dr.ci95, cfg.runs, "count"});
    return report;
}

BenchReport run_accuracy(const BenchConfig& cfg, const Trace& trace) {
    if (cfg.runs == 0) {
        throw std::invalid_argument("run_accuracy: runs must be >= 1");
    }
    constexpr Protocol kProtocols[] = {Protocol::on_arrival, Protocol::per_flow,
                                       Protocol::postmortem};
    struct MetricRuns {
        std::vector<double> msre, avgerr, avgrelerr, rmse;
    };
    MetricRuns per_protocol[3];
    std::vector<double> drops;

    for (std::uint32_t r = 0; r < cfg.runs; ++r) {
        const Seed seed = cfg.base_seed + r;
        for (int pi = 0; pi < 3; ++pi) {
            auto estimator = make_estimator(cfg, trace.stats().n_items, seed);
            const ErrorReport rep = run_protocol(kProtocols[pi], trace.items(), *estimator);
            per_protocol[pi].msre.push_back(rep.msre_as_written);
            per_protocol[pi].avgerr.push_back(rep.avgerr);
            per_protocol[pi].avgrelerr.push_back(rep.avgrelerr);
            per_protocol[pi].rmse.push_back(rep.rmse);
            if (kProtocols[pi] == Protocol::on_arrival) {
                drops.push_back(static_cast<double>(estimator->drops()));
            }
        }
    }

    const std::string algorithm{to_string(cfg.algorithm)};
    BenchReport report;
    for (int pi = 0; pi < 3; ++pi) {
        const char* proto = protocol_name(kProtocols[pi]);
        const struct {
            const char* metric;
            const std::vector<double>& values;
            const char* units;
        } rows[] = {
            {"msre", per_protocol[pi].msre, "count"},
            {"avgerr", per_protocol[pi].avgerr, "count"},
            {"avgrelerr", per_protocol[pi].avgrelerr, "ratio"},
            {"rmse", per_protocol[pi].rmse, "count"},
        };
        for (const auto& row : rows) {
            const Aggregate agg = aggregate(row.values);
            report.rows.push_back(BenchRow{algorithm, trace.label(), proto, row.metric,
                                           agg.mean, agg.ci95, cfg.runs, row.units});
        }
    }
    const Aggregate dr = aggregate(drops);
    report.rows.push_back(BenchRow{algorithm, trace.label(), "accuracy", "drops", dr.mean,
                                   dr.ci95, cfg.runs, "count"});
    return report;
}

BenchReport run_memory(const BenchConfig& cfg, const Trace& trace) {
    if (cfg.runs == 0) {
        throw std::invalid_argument("run_memory: runs must be >= 1");
    }
    std::vector<double> memory_bytes;
    std::vector<double> stored_items;
    std::vector<double> stored_bytes;
    std::vector<double> drops;
    bool have_items = true;
    bool have_bytes = true;

    for (std::uint32_t r = 0; r < cfg.runs; ++r) {
        auto estimator = make_estimator(cfg, trace.stats().n_items, cfg.base_seed + r);
        for (const FlowKey& key : trace.items()) {
            estimator->record(key);
        }
        memory_bytes.push_back(static_cast<double>(estimator->memory_bytes()));
        drops.push_back(static_cast<double>(estimator->drops()));
        if (const auto items = estimator->stored_items()) {
            stored_items.push_back(static_cast<double>(*items));
        } else {
            have_items = false;
        }
        if (const auto bytes = estimator->stored_bytes()) {
            stored_bytes.push_back(static_cast<double>(*bytes));
        } else {
            have_bytes = false;
        }
    }

    const std::string algorithm{to_string(cfg.algorithm)};
    BenchReport report;
    const Aggregate mem = aggregate(memory_bytes);
    report.rows.push_back(BenchRow{algorithm, trace.label(), "memory", "memory_bytes",
                                   mem.mean, mem.ci95, cfg.runs, "bytes"});
    if (have_items) {
        const Aggregate agg = aggregate(stored_items);
        report.rows.push_back(BenchRow{algorithm, trace.label(), "memory", "stored_items",
                                       agg.mean, agg.ci95, cfg.runs, "entries"});
    }
    if (have_bytes) {
        const Aggregate agg = aggregate(stored_bytes);
        report.rows.push_back(BenchRow{algorithm, trace.label(), "memory", "stored_bytes",
                                       agg.mean, agg.ci95, cfg.runs, "bytes"});
    }
    const Aggregate dr = aggregate(drops);
    report.rows.push_back(BenchRow{algorithm, trace.label(), "memory", "drops", dr.mean,
                                   dr.ci95, cfg.runs, "count"});
    return report;
}

}  // namespace sketchbench

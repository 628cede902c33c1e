#pragma once
// In-memory streams of flow keys. A trace is fully resident before any
// measurement touches it and immutable afterwards. Sources: a text file
// with one key per line, or a seeded Zipf generator for synthetic
// workloads (rank i drawn with probability proportional to 1/i^alpha via
// inverse CDF over precomputed cumulative weights, so a spec pins the
// byte-exact sequence).

#include <cstdint>
#include <string>
#include <vector>

#include "sketchbench/flow_key.hpp"
#include "sketchbench/hashing.hpp"

namespace sketchbench {

struct TraceStats {
    std::uint64_t n_items = 0;
    std::uint64_t n_uniques = 0;
};

struct ZipfSpec {
    std::uint64_t n_items = 0;
    std::uint64_t universe = 0;
    double alpha = 1.0;
    Seed seed = 0;
};

class Trace {
public:
    Trace(std::vector<FlowKey> items, std::string label);

    static Trace load(const std::string& path);
    static Trace zipf(const ZipfSpec& spec);

    Trace prefix(std::uint64_t k) const;
    void save(const std::string& path) const;

    const std::vector<FlowKey>& items() const noexcept { return items_; }
    const TraceStats& stats() const noexcept { return stats_; }
    const std::string& label() const noexcept { return label_; }

private:
    std::vector<FlowKey> items_;
    TraceStats stats_;
    std::string label_;
};

std::string zipf_label(const ZipfSpec& spec);

}  // namespace sketchbench

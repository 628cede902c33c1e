#pragma once
// The uniform interface every frequency estimator implements. Estimates are
// real-valued: whole numbers for exact structures, possibly fractional after
// 1/p scaling in the sampled variants. All implementations are
// single-threaded; distinct instances may live on distinct threads.

#include <cstdint>
#include <optional>
#include <string_view>

#include "sketchbench/flow_key.hpp"

namespace sketchbench {

// Estimated frequency, in occurrences. Never negative.
using Estimate = double;

class FrequencyEstimator {
public:
    virtual ~FrequencyEstimator() = default;

    // Process one stream occurrence of key. Sampled variants may
    // probabilistically do nothing. Cuckoo counts an item it had to drop
    // (eviction chain exhausted) in drops() instead of failing.
    virtual void record(const FlowKey& key) = 0;

    // Point estimate for key. Read-only: never mutates counts.
    virtual Estimate estimate(const FlowKey& key) const = 0;

    // Accounting figure under the fixed conventions (4-byte counters,
    // 4-byte identifiers, 8-byte fingerprints), not allocator footprint.
    virtual std::uint64_t memory_bytes() const = 0;

    // Distinct entries currently held, for structures that store
    // identifiers or fingerprints; nullopt where the entry count is fixed
    // by the error guarantee and the measure is meaningless.
    virtual std::optional<std::uint64_t> stored_items() const = 0;

    // Space consumed by the stored entries, same convention as
    // memory_bytes; nullopt where stored_items is.
    virtual std::optional<std::uint64_t> stored_bytes() const { return std::nullopt; }

    // Items dropped because the structure could not place them.
    virtual std::uint64_t drops() const { return 0; }

    virtual std::string_view name() const = 0;
};

}  // namespace sketchbench

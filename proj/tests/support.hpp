#pragma once
// Shared helpers for the test binaries.

#include <cstdint>
#include <optional>
#include <string_view>

#include "sketchbench/estimator.hpp"

namespace sketchbench::testing {

// Answers 0 for everything; pins down the metric formulas from the
// estimator-independent side.
class ZeroEstimator final : public FrequencyEstimator {
public:
    void record(const FlowKey&) override {}
    Estimate estimate(const FlowKey&) const override { return 0.0; }
    std::uint64_t memory_bytes() const override { return 0; }
    std::optional<std::uint64_t> stored_items() const override { return std::nullopt; }
    std::string_view name() const override { return "zero"; }
};

}  // namespace sketchbench::testing

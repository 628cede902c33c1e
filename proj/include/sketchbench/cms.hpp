#pragma once
// Count-Min sketch: d rows of w counters, one seeded hash per row. Three
// update rules behind one estimate rule (min over the mapped counters):
//   conservative - only the mapped counters equal to the current minimum
//                  are incremented,
//   plain        - every mapped counter is incremented,
//   nitro        - plain increments, each gated individually by the gap
//                  sampler; with p < 1/d whole items are skipped. Raw
//                  sample counts are stored and scaled by 1/p at query
//                  time.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sketchbench/estimator.hpp"
#include "sketchbench/skip_sampler.hpp"

namespace sketchbench {

// w = ceil(e/epsilon), d = ceil(ln(1/delta)). Rejects parameters outside
// (0, 1).
std::pair<std::uint64_t, std::uint64_t> cms_dims(double epsilon, double delta);

enum class CmsMode { conservative, plain, nitro };

struct CmsConfig {
    std::uint64_t width = 0;
    std::uint64_t depth = 0;
    CmsMode mode = CmsMode::conservative;
    double p = 1.0;  // nitro only

    static CmsConfig from_error_bounds(double epsilon, double delta,
                                       CmsMode mode = CmsMode::conservative,
                                       double p = 1.0);
};

class CmsEstimator final : public FrequencyEstimator {
public:
    CmsEstimator(const CmsConfig& config, Seed seed);

    void record(const FlowKey& key) override;
    Estimate estimate(const FlowKey& key) const override;

    std::uint64_t memory_bytes() const override;  // w x d x 4 bytes
    std::optional<std::uint64_t> stored_items() const override { return std::nullopt; }
    std::string_view name() const override;

    std::uint64_t width() const noexcept { return width_; }
    std::uint64_t depth() const noexcept { return depth_; }
    CmsMode mode() const noexcept { return mode_; }
    double p() const noexcept { return p_; }

    std::uint64_t row_index(const FlowKey& key, std::uint64_t row) const;
    std::uint64_t counter(std::uint64_t row, std::uint64_t col) const;
    const std::vector<std::uint64_t>& counters() const noexcept { return counters_; }

private:
    std::uint64_t& cell(std::uint64_t row, std::uint64_t col) {
        return counters_[row * width_ + col];
    }
    const std::uint64_t& cell(std::uint64_t row, std::uint64_t col) const {
        return counters_[row * width_ + col];
    }

    std::uint64_t width_;
    std::uint64_t depth_;
    CmsMode mode_;
    double p_;
    std::vector<std::uint64_t> counters_;  // row-major d x w
    std::vector<Seed> row_seeds_;
    std::optional<SkipSampler> sampler_;
    std::vector<std::uint64_t> scratch_cols_;
};

}  // namespace sketchbench

#pragma once
// Space Saving: a fixed budget of M (key, counter) entries kept in an
// indexed binary min-heap. A tracked arrival bumps its counter. An
// untracked arrival with room to spare starts a fresh counter at 1; once
// the table is full it replaces the minimal entry and inherits its
// counter plus one, which is what makes every tracked counter a one-sided
// overestimate. Queries return the tracked counter, or the current
// minimum for untracked keys (0 only while the table is empty).
//
// RAP mode softens the replacement: an untracked arrival at a full table
// is admitted with probability 1/(C_m+1) and otherwise ignored, so a
// stream of one-off keys can no longer churn the table for free. Tracked
// arrivals behave exactly as in plain mode and never touch the PRNG.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sketchbench/estimator.hpp"
#include "sketchbench/flow_key.hpp"
#include "sketchbench/hashing.hpp"

namespace sketchbench {

enum class SpaceSavingMode { plain, rap };

class SpaceSavingEstimator final : public FrequencyEstimator {
public:
    SpaceSavingEstimator(std::uint64_t budget, SpaceSavingMode mode, Seed seed);

    static std::uint64_t budget_from_epsilon(double epsilon);  // ceil(1/eps)

    void record(const FlowKey& key) override;
    Estimate estimate(const FlowKey& key) const override;

    std::uint64_t memory_bytes() const override;  // M x (4 + 4) bytes
    std::optional<std::uint64_t> stored_items() const override;
    std::optional<std::uint64_t> stored_bytes() const override;
    std::string_view name() const override;

    std::uint64_t budget() const noexcept { return budget_; }
    SpaceSavingMode mode() const noexcept { return mode_; }
    std::uint64_t items_seen() const noexcept { return items_seen_; }

    std::uint64_t tracked_count() const noexcept { return heap_.size(); }
    bool is_tracked(const FlowKey& key) const { return pos_.contains(key); }
    std::uint64_t min_counter() const;   // 0 while empty
    std::uint64_t counter_sum() const;

private:
    struct Entry {
        FlowKey key;
        std::uint64_t count;
    };

    void swap_entries(std::size_t a, std::size_t b);
    void sift_up(std::size_t i);
    void sift_down(std::size_t i);

    std::uint64_t budget_;
    SpaceSavingMode mode_;
    std::vector<Entry> heap_;
    std::unordered_map<FlowKey, std::size_t> pos_;
    std::mt19937_64 rng_;
    std::uint64_t items_seen_ = 0;
};

}  // namespace sketchbench

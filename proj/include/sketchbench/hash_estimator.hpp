#pragma once
// Exact counter table: one 64-bit counter per distinct key, found by seeded
// hashing. The sampled variant consults the gap sampler first and hashes
// only the records it processes, so hashing happens once every 1/p items in
// expectation; estimates are scaled by 1/p at query time.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sketchbench/estimator.hpp"
#include "sketchbench/skip_sampler.hpp"

namespace sketchbench {

class HashEstimator final : public FrequencyEstimator {
public:
    // Exact mode.
    explicit HashEstimator(Seed seed);
    // Sampled mode with probability p in (0, 1].
    HashEstimator(double p, Seed seed);

    void record(const FlowKey& key) override;
    Estimate estimate(const FlowKey& key) const override;

    std::uint64_t memory_bytes() const override;   // capacity x (4+4) bytes
    std::optional<std::uint64_t> stored_items() const override;
    std::optional<std::uint64_t> stored_bytes() const override;
    std::string_view name() const override;

    double p() const noexcept { return p_; }
    std::uint64_t capacity() const noexcept { return slots_.size(); }
    // Key-hash invocations so far, both record and query paths. Table
    // growth rehashes from stored hashes and does not add to this.
    std::uint64_t hash_calls() const noexcept { return hash_calls_; }

private:
    struct Slot {
        std::uint64_t hash = 0;
        std::uint64_t count = 0;
        std::string key;  // empty = free slot (flow keys are never empty)
    };

    void upsert(std::uint64_t h, const std::string& bytes);
    const Slot* find(std::uint64_t h, const std::string& bytes) const;
    void grow();

    static constexpr std::size_t kInitialCapacity = 16;

    std::vector<Slot> slots_;
    std::size_t size_ = 0;
    Seed hash_seed_;
    double p_;
    std::optional<SkipSampler> sampler_;
    mutable std::uint64_t hash_calls_ = 0;
};

}  // namespace sketchbench

#pragma once
// Counting cuckoo filter: buckets of b slots, each slot a (fingerprint,
// counter) pair. A key maps to two candidate buckets; the second index is
// i1 ^ hash(fingerprint), so either bucket recovers the other from the
// slot contents alone (partial-key cuckoo hashing). The bucket count is a
// power of two to keep that XOR an exact involution.
//
// Repeats of a stored fingerprint bump its counter instead of occupying a
// new slot. Inserting into a full pair of buckets evicts a random resident
// and relocates it, up to max_kicks hops; after that the wandering entry
// is discarded and the drop is counted.
//
// Three flavors:
//   exact - every arrival is inserted,
//   nitro - arrivals pass a geometric gap sampler, counts are scaled by
//           1/p at query time,
//   small - nitro sampling plus a table sized for capacity*p, since only
//           about that many distinct keys survive sampling.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sketchbench/estimator.hpp"
#include "sketchbench/hashing.hpp"
#include "sketchbench/skip_sampler.hpp"

#include <random>

namespace sketchbench {

enum class CuckooMode { exact, nitro, small };

struct CuckooConfig {
    std::uint64_t capacity = 0;          // distinct keys the table should hold
    std::uint32_t fingerprint_bits = 64;
    std::uint32_t slots_per_bucket = 4;
    std::uint32_t max_kicks = 500;
    CuckooMode mode = CuckooMode::exact;
    double p = 1.0;                      // nitro and small only
};

class CuckooEstimator final : public FrequencyEstimator {
public:
    CuckooEstimator(const CuckooConfig& config, Seed seed);

    void record(const FlowKey& key) override;
    Estimate estimate(const FlowKey& key) const override;

    std::uint64_t memory_bytes() const override;  // slots x (8 + 4) bytes
    std::optional<std::uint64_t> stored_items() const override;
    std::optional<std::uint64_t> stored_bytes() const override;
    std::uint64_t drops() const override { return drop_events_; }
    std::string_view name() const override;

    std::uint64_t bucket_count() const noexcept { return bucket_mask_ + 1; }
    std::uint32_t slots_per_bucket() const noexcept { return slots_per_bucket_; }
    std::uint64_t slot_count() const noexcept { return bucket_count() * slots_per_bucket_; }
    double p() const noexcept { return p_; }

    std::uint64_t fingerprint(const FlowKey& key) const;
    std::uint64_t alt_index(std::uint64_t index, std::uint64_t fp) const;
    std::pair<std::uint64_t, std::uint64_t> index_pair(const FlowKey& key) const;

    // Raw counter mass held in the table (unscaled) and mass lost to
    // failed relocations. Their sum equals the number of accepted inserts.
    std::uint64_t total_count() const;
    std::uint64_t dropped_mass() const noexcept { return dropped_mass_; }

private:
    struct Slot {
        std::uint64_t fp = 0;  // 0 marks a free slot
        std::uint64_t count = 0;
    };

    Slot* find(std::uint64_t bucket, std::uint64_t fp);
    const Slot* find(std::uint64_t bucket, std::uint64_t fp) const;
    Slot* find_free(std::uint64_t bucket);
    void insert(const FlowKey& key);

    Slot& slot(std::uint64_t bucket, std::uint32_t idx) {
        return slots_[bucket * slots_per_bucket_ + idx];
    }
    const Slot& slot(std::uint64_t bucket, std::uint32_t idx) const {
        return slots_[bucket * slots_per_bucket_ + idx];
    }

    std::uint32_t slots_per_bucket_;
    std::uint32_t max_kicks_;
    CuckooMode mode_;
    double p_;
    std::uint64_t bucket_mask_;
    std::uint64_t fp_mask_;
    Seed index_seed_;
    Seed fp_seed_;
    Seed fp_index_seed_;
    std::vector<Slot> slots_;
    std::optional<SkipSampler> sampler_;
    mutable std::mt19937_64 victim_rng_;
    std::uint64_t occupied_ = 0;
    std::uint64_t drop_events_ = 0;
    std::uint64_t dropped_mass_ = 0;
};

}  // namespace sketchbench

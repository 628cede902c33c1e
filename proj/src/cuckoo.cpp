#include "sketchbench/cuckoo.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "sketchbench/sizing.hpp"

namespace sketchbench {

namespace {

std::uint64_t pow2_at_least(std::uint64_t n) {
    return std::bit_ceil(n == 0 ? std::uint64_t{1} : n);
}

}  // namespace

CuckooEstimator::CuckooEstimator(const CuckooConfig& config, Seed seed)
    : slots_per_bucket_(config.slots_per_bucket),
      max_kicks_(config.max_kicks),
      mode_(config.mode),
      p_(config.mode == CuckooMode::exact ? 1.0 : config.p),
      victim_rng_(derive_seed(seed, 0x65766963)) {
    if (config.capacity == 0) {
        throw std::invalid_argument("CuckooEstimator: capacity must be positive");
    }
    if (slots_per_bucket_ == 0) {
        throw std::invalid_argument("CuckooEstimator: slots_per_bucket must be positive");
    }
    if (config.fingerprint_bits == 0 || config.fingerprint_bits > 64) {
        throw std::invalid_argument("CuckooEstimator: fingerprint_bits must be in [1, 64]");
    }
    std::uint64_t capacity = config.capacity;
    if (mode_ == CuckooMode::small) {
        capacity = ceil_count(static_cast<double>(capacity) * p_);
    }
    const std::uint64_t buckets =
        pow2_at_least((capacity + slots_per_bucket_ - 1) / slots_per_bucket_);
    bucket_mask_ = buckets - 1;
    fp_mask_ = config.fingerprint_bits == 64
                   ? ~std::uint64_t{0}
                   : (std::uint64_t{1} << config.fingerprint_bits) - 1;
    index_seed_ = derive_seed(seed, 0x69647831);
    fp_seed_ = derive_seed(seed, 0x67707274);
    fp_index_seed_ = derive_seed(seed, 0x69647832);
    slots_.assign(buckets * slots_per_bucket_, Slot{});
    if (mode_ != CuckooMode::exact) {
        sampler_.emplace(p_, derive_seed(seed, 0x636b7073));
    }
}

std::uint64_t CuckooEstimator::fingerprint(const FlowKey& key) const {
    const std::uint64_t fp = key.hash(fp_seed_) & fp_mask_;
    // 0 is the free-slot marker, so that fingerprint value is remapped.
    return fp == 0 ? 1 : fp;
}

std::uint64_t CuckooEstimator::alt_index(std::uint64_t index, std::uint64_t fp) const {
    return (index ^ hash_u64(fp, fp_index_seed_)) & bucket_mask_;
}

std::pair<std::uint64_t, std::uint64_t> CuckooEstimator::index_pair(const FlowKey& key) const {
    const std::uint64_t i1 = key.hash(index_seed_) & bucket_mask_;
    return {i1, alt_index(i1, fingerprint(key))};
}

CuckooEstimator::Slot* CuckooEstimator::find(std::uint64_t bucket, std::uint64_t fp) {
    for (std::uint32_t s = 0; s < slots_per_bucket_; ++s) {
        if (slot(bucket, s).fp == fp) {
            return &slot(bucket, s);
        }
    }
    return nullptr;
}

const CuckooEstimator::Slot* CuckooEstimator::find(std::uint64_t bucket,
                                                   std::uint64_t fp) const {
    for (std::uint32_t s = 0; s < slots_per_bucket_; ++s) {
        if (slot(bucket, s).fp == fp) {
            return &slot(bucket, s);
        }
    }
    return nullptr;
}

CuckooEstimator::Slot* CuckooEstimator::find_free(std::uint64_t bucket) {
    return find(bucket, 0);
}

void CuckooEstimator::insert(const FlowKey& key) {
    const std::uint64_t fp = fingerprint(key);
    const auto [i1, i2] = index_pair(key);

    if (Slot* s = find(i1, fp)) {
        ++s->count;
        return;
    }
    if (i2 != i1) {
        if (Slot* s = find(i2, fp)) {
            ++s->count;
            return;
        }
    }
    if (Slot* s = find_free(i1)) {
        *s = Slot{fp, 1};
        ++occupied_;
        return;
    }
    if (Slot* s = find_free(i2)) {
        *s = Slot{fp, 1};
        ++occupied_;
        return;
    }

    // Both buckets full: bounce a resident to its alternate bucket and
    // take its place, repeating until a hole turns up or patience runs
    // out. The held entry keeps its full counter while it wanders.
    Slot held{fp, 1};
    std::uint64_t bucket = (victim_rng_() & 1) ? i2 : i1;
    for (std::uint32_t kick = 0; kick < max_kicks_; ++kick) {
        const std::uint32_t victim =
            static_cast<std::uint32_t>(victim_rng_() % slots_per_bucket_);
        std::swap(held, slot(bucket, victim));
        bucket = alt_index(bucket, held.fp);
        if (Slot* s = find(bucket, held.fp)) {
            // The evictee's fingerprint already lives here; fold the
            // counters together instead of storing it twice.
            s->count += held.count;
            return;
        }
        if (Slot* s = find_free(bucket)) {
            *s = held;
            ++occupied_;
            return;
        }
    }
    // Every swap refilled the slot it emptied, so occupancy is unchanged;
    // the entry still in hand is discarded and its mass is lost.
    ++drop_events_;
    dropped_mass_ += held.count;
}

void CuckooEstimator::record(const FlowKey& key) {
    if (sampler_ && !sampler_->should_process()) {
        return;
    }
    insert(key);
}

Estimate CuckooEstimator::estimate(const FlowKey& key) const {
    const std::uint64_t fp = fingerprint(key);
    const auto [i1, i2] = index_pair(key);
    std::uint64_t raw = 0;
    if (const Slot* s = find(i1, fp)) {
        raw = s->count;
    } else if (const Slot* s2 = (i2 != i1) ? find(i2, fp) : nullptr) {
        raw = s2->count;
    }
    if (mode_ == CuckooMode::exact) {
        return static_cast<double>(raw);
    }
    return scale_estimate(raw, p_);
}

std::uint64_t CuckooEstimator::memory_bytes() const {
    return slots_.size() * 12;
}

std::optional<std::uint64_t> CuckooEstimator::stored_items() const {
    return occupied_;
}

std::optional<std::uint64_t> CuckooEstimator::stored_bytes() const {
    return occupied_ * 12;
}

std::uint64_t CuckooEstimator::total_count() const {
    std::uint64_t total = 0;
    for (const Slot& s : slots_) {
        total += s.count;
    }
    return total;
}

std::string_view CuckooEstimator::name() const {
    switch (mode_) {
    case CuckooMode::exact: return "cuckoo";
    case CuckooMode::nitro: return "nitrocuckoo";
    case CuckooMode::small: return "nc_small";
    }
    return "cuckoo";
}

}  // namespace sketchbench

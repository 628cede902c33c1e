#include "sketchbench/hash_estimator.hpp"

#include <utility>

namespace sketchbench {

HashEstimator::HashEstimator(Seed seed)
    : slots_(kInitialCapacity), hash_seed_(derive_seed(seed, 0x68617368)), p_(1.0) {}

HashEstimator::HashEstimator(double p, Seed seed)
    : slots_(kInitialCapacity),
      hash_seed_(derive_seed(seed, 0x68617368)),
      p_(p),
      sampler_(SkipSampler(p, derive_seed(seed, 0x73616d70))) {}

void HashEstimator::record(const FlowKey& key) {
    // Sampler first: a skipped record computes no hash at all.
    if (sampler_ && !sampler_->should_process()) {
        return;
    }
    ++hash_calls_;
    upsert(key.hash(hash_seed_), key.bytes());
}

Estimate HashEstimator::estimate(const FlowKey& key) const {
    ++hash_calls_;
    const Slot* s = find(key.hash(hash_seed_), key.bytes());
    std::uint64_t raw = s ? s->count : 0;
    return sampler_ ? scale_estimate(raw, p_) : static_cast<Estimate>(raw);
}

std::uint64_t HashEstimator::memory_bytes() const {
    return static_cast<std::uint64_t>(slots_.size()) * 8;
}

std::optional<std::uint64_t> HashEstimator::stored_items() const {
    return size_;
}

std::optional<std::uint64_t> HashEstimator::stored_bytes() const {
    return static_cast<std::uint64_t>(size_) * 8;
}

std::string_view HashEstimator::name() const {
    return sampler_ ? "nitrohash" : "hash";
}

void HashEstimator::upsert(std::uint64_t h, const std::string& bytes) {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = h & mask;
    while (!slots_[i].key.empty()) {
        if (slots_[i].hash == h && slots_[i].key == bytes) {
            ++slots_[i].count;
            return;
        }
        i = (i + 1) & mask;
    }
    slots_[i] = Slot{h, 1, bytes};
    ++size_;
    if ((size_ + 1) * 10 > slots_.size() * 7) {
        grow();
    }
}

const HashEstimator::Slot* HashEstimator::find(std::uint64_t h, const std::string& bytes) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = h & mask;
    while (!slots_[i].key.empty()) {
        if (slots_[i].hash == h && slots_[i].key == bytes) {
            return &slots_[i];
        }
        i = (i + 1) & mask;
    }
    return nullptr;
}

void HashEstimator::grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    std::size_t mask = slots_.size() - 1;
    for (Slot& s : old) {
        if (s.key.empty()) {
            continue;
        }
        std::size_t i = s.hash & mask;
        while (!slots_[i].key.empty()) {
            i = (i + 1) & mask;
        }
        slots_[i] = std::move(s);
    }
}

}  // namespace sketchbench

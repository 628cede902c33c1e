#include "sketchbench/space_saving.hpp"

#include <stdexcept>

#include "sketchbench/sizing.hpp"
#include "sketchbench/skip_sampler.hpp"

namespace sketchbench {

SpaceSavingEstimator::SpaceSavingEstimator(std::uint64_t budget, SpaceSavingMode mode,
                                           Seed seed)
    : budget_(budget), mode_(mode), rng_(derive_seed(seed, 0x72617063)) {
    if (budget_ == 0) {
        throw std::invalid_argument("SpaceSavingEstimator: budget must be positive");
    }
    heap_.reserve(budget_);
}

std::uint64_t SpaceSavingEstimator::budget_from_epsilon(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon <= 1.0)) {
        throw std::invalid_argument("budget_from_epsilon: epsilon must be in (0, 1]");
    }
    return ceil_count(1.0 / epsilon);
}

void SpaceSavingEstimator::swap_entries(std::size_t a, std::size_t b) {
    std::swap(heap_[a], heap_[b]);
    pos_[heap_[a].key] = a;
    pos_[heap_[b].key] = b;
}

void SpaceSavingEstimator::sift_up(std::size_t i) {
    while (i > 0) {
        const std::size_t parent = (i - 1) / 2;
        if (heap_[parent].count <= heap_[i].count) {
            break;
        }
        swap_entries(i, parent);
        i = parent;
    }
}

void SpaceSavingEstimator::sift_down(std::size_t i) {
    for (;;) {
        const std::size_t left = 2 * i + 1;
        const std::size_t right = left + 1;
        std::size_t smallest = i;
        if (left < heap_.size() && heap_[left].count < heap_[smallest].count) {
            smallest = left;
        }
        if (right < heap_.size() && heap_[right].count < heap_[smallest].count) {
            smallest = right;
        }
        if (smallest == i) {
            break;
        }
        swap_entries(i, smallest);
        i = smallest;
    }
}

void SpaceSavingEstimator::record(const FlowKey& key) {
    ++items_seen_;

    if (auto it = pos_.find(key); it != pos_.end()) {
        ++heap_[it->second].count;
        sift_down(it->second);
        return;
    }

    if (heap_.size() < budget_) {
        heap_.push_back(Entry{key, 1});
        pos_.emplace(key, heap_.size() - 1);
        sift_up(heap_.size() - 1);
        return;
    }

    const std::uint64_t c_m = heap_[0].count;
    if (mode_ == SpaceSavingMode::rap) {
        if (uniform_unit(rng_) > 1.0 / static_cast<double>(c_m + 1)) {
            return;
        }
    }
    // Replace the minimal entry; the newcomer inherits its counter plus
    // one, never a reset.
    pos_.erase(heap_[0].key);
    heap_[0] = Entry{key, c_m + 1};
    pos_.emplace(key, 0);
    sift_down(0);
}

Estimate SpaceSavingEstimator::estimate(const FlowKey& key) const {
    if (auto it = pos_.find(key); it != pos_.end()) {
        return static_cast<double>(heap_[it->second].count);
    }
    return static_cast<double>(min_counter());
}

std::uint64_t SpaceSavingEstimator::min_counter() const {
    return heap_.empty() ? 0 : heap_[0].count;
}

std::uint64_t SpaceSavingEstimator::counter_sum() const {
    std::uint64_t total = 0;
    for (const Entry& e : heap_) {
        total += e.count;
    }
    return total;
}

std::uint64_t SpaceSavingEstimator::memory_bytes() const {
    return budget_ * 8;
}

std::optional<std::uint64_t> SpaceSavingEstimator::stored_items() const {
    return heap_.size();
}

std::optional<std::uint64_t> SpaceSavingEstimator::stored_bytes() const {
    return heap_.size() * 8;
}

std::string_view SpaceSavingEstimator::name() const {
    return mode_ == SpaceSavingMode::plain ? "spacesaving" : "spacesaving_rap";
}

}  // namespace sketchbench

#pragma once
// Exact reference counts for a stream: true frequency per key, stream
// length N, and the number of distinct flows M.

#include <cstdint>
#include <unordered_map>

#include "sketchbench/flow_key.hpp"

namespace sketchbench {

class GroundTruth {
public:
    void record(const FlowKey& key) {
        ++counts_[key];
        ++total_;
    }

    std::uint64_t count(const FlowKey& key) const {
        const auto it = counts_.find(key);
        return it == counts_.end() ? 0 : it->second;
    }

    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t uniques() const noexcept { return counts_.size(); }

    const std::unordered_map<FlowKey, std::uint64_t>& counts() const noexcept {
        return counts_;
    }

private:
    std::unordered_map<FlowKey, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

}  // namespace sketchbench

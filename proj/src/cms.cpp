#include "sketchbench/cms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sketchbench/hashing.hpp"
#include "sketchbench/sizing.hpp"

namespace sketchbench {

std::pair<std::uint64_t, std::uint64_t> cms_dims(double epsilon, double delta) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::invalid_argument("cms_dims: epsilon must be in (0, 1)");
    }
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::invalid_argument("cms_dims: delta must be in (0, 1)");
    }
    const std::uint64_t w = ceil_count(std::exp(1.0) / epsilon);
    const std::uint64_t d = ceil_count(std::log(1.0 / delta));
    return {w, d};
}

CmsConfig CmsConfig::from_error_bounds(double epsilon, double delta,
                                       CmsMode mode, double p) {
    const auto [w, d] = cms_dims(epsilon, delta);
    CmsConfig config;
    config.width = w;
    config.depth = d;
    config.mode = mode;
    config.p = p;
    return config;
}

CmsEstimator::CmsEstimator(const CmsConfig& config, Seed seed)
    : width_(config.width),
      depth_(config.depth),
      mode_(config.mode),
      p_(config.mode == CmsMode::nitro ? config.p : 1.0) {
    if (width_ == 0 || depth_ == 0) {
        throw std::invalid_argument("CmsEstimator: width and depth must be positive");
    }
    counters_.assign(width_ * depth_, 0);
    row_seeds_.reserve(depth_);
    for (std::uint64_t row = 0; row < depth_; ++row) {
        row_seeds_.push_back(derive_seed(seed, row));
    }
    if (mode_ == CmsMode::nitro) {
        sampler_.emplace(p_, derive_seed(seed, 0x6e637073));
    }
    if (mode_ == CmsMode::conservative) {
        scratch_cols_.resize(depth_);
    }
}

std::uint64_t CmsEstimator::row_index(const FlowKey& key, std::uint64_t row) const {
    return key.hash(row_seeds_[row]) % width_;
}

std::uint64_t CmsEstimator::counter(std::uint64_t row, std::uint64_t col) const {
    return cell(row, col);
}

void CmsEstimator::record(const FlowKey& key) {
    switch (mode_) {
    case CmsMode::plain:
        for (std::uint64_t row = 0; row < depth_; ++row) {
            ++cell(row, row_index(key, row));
        }
        break;
    case CmsMode::conservative: {
        // Two passes: locate the minimum across the mapped counters, then
        // bump only the counters sitting at that minimum.
        std::uint64_t min_value = std::numeric_limits<std::uint64_t>::max();
        for (std::uint64_t row = 0; row < depth_; ++row) {
            scratch_cols_[row] = row_index(key, row);
            min_value = std::min(min_value, cell(row, scratch_cols_[row]));
        }
        for (std::uint64_t row = 0; row < depth_; ++row) {
            auto& c = cell(row, scratch_cols_[row]);
            if (c == min_value) {
                ++c;
            }
        }
        break;
    }
    case CmsMode::nitro:
        // The sampler gates each counter update on its own, so one arrival
        // may touch any subset of the d rows. The gap sequence runs across
        // item boundaries.
        for (std::uint64_t row = 0; row < depth_; ++row) {
            if (sampler_->should_process()) {
                ++cell(row, row_index(key, row));
            }
        }
        break;
    }
}

Estimate CmsEstimator::estimate(const FlowKey& key) const {
    std::uint64_t min_value = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t row = 0; row < depth_; ++row) {
        min_value = std::min(min_value, cell(row, row_index(key, row)));
    }
    if (mode_ == CmsMode::nitro) {
        return scale_estimate(min_value, p_);
    }
    return static_cast<double>(min_value);
}

std::uint64_t CmsEstimator::memory_bytes() const {
    return width_ * depth_ * 4;
}

std::string_view CmsEstimator::name() const {
    switch (mode_) {
    case CmsMode::conservative: return "cms";
    case CmsMode::plain: return "cms_nomi";
    case CmsMode::nitro: return "nitrocms";
    }
    return "cms";
}

}  // namespace sketchbench

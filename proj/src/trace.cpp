#include "sketchbench/trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "sketchbench/skip_sampler.hpp"

namespace sketchbench {

namespace {

TraceStats compute_stats(const std::vector<FlowKey>& items) {
    std::unordered_set<FlowKey> seen;
    seen.reserve(items.size());
    for (const FlowKey& key : items) {
        seen.insert(key);
    }
    return TraceStats{items.size(), seen.size()};
}

}  // namespace

Trace::Trace(std::vector<FlowKey> items, std::string label)
    : items_(std::move(items)), label_(std::move(label)) {
    if (items_.empty()) {
        throw std::invalid_argument("Trace: empty trace rejected");
    }
    stats_ = compute_stats(items_);
}

Trace Trace::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("Trace::load: cannot open " + path);
    }
    std::vector<FlowKey> items;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            throw std::runtime_error("Trace::load: " + path + " line " +
                                     std::to_string(line_no) + ": blank line");
        }
        items.emplace_back(std::move(line));
        line.clear();
    }
    if (in.bad()) {
        throw std::runtime_error("Trace::load: read failure on " + path);
    }
    if (items.empty()) {
        throw std::runtime_error("Trace::load: " + path + " is empty");
    }
    return Trace(std::move(items), path);
}

std::string zipf_label(const ZipfSpec& spec) {
    char alpha_text[32];
    std::snprintf(alpha_text, sizeof(alpha_text), "%g", spec.alpha);
    return "zipf_n" + std::to_string(spec.n_items) + "_u" +
           std::to_string(spec.universe) + "_a" + alpha_text + "_s" +
           std::to_string(spec.seed);
}

Trace Trace::zipf(const ZipfSpec& spec) {
    if (spec.n_items == 0) {
        throw std::invalid_argument("Trace::zipf: n_items must be positive");
    }
    if (spec.universe == 0) {
        throw std::invalid_argument("Trace::zipf: universe must be positive");
    }
    if (spec.alpha < 0.0 || !std::isfinite(spec.alpha)) {
        throw std::invalid_argument("Trace::zipf: alpha must be finite and >= 0");
    }

    std::vector<double> cumulative;
    cumulative.reserve(spec.universe);
    double total = 0.0;
    for (std::uint64_t i = 1; i <= spec.universe; ++i) {
        total += std::pow(static_cast<double>(i), -spec.alpha);
        cumulative.push_back(total);
    }

    // Pre-render one key per rank so the hot loop only copies.
    std::vector<FlowKey> dictionary;
    dictionary.reserve(spec.universe);
    for (std::uint64_t i = 1; i <= spec.universe; ++i) {
        dictionary.push_back(FlowKey::from_uint(i));
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<FlowKey> items;
    items.reserve(spec.n_items);
    for (std::uint64_t n = 0; n < spec.n_items; ++n) {
        const double u = uniform_unit(rng) * total;  // in (0, total]
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t rank =
            it == cumulative.end() ? spec.universe - 1
                                   : static_cast<std::size_t>(it - cumulative.begin());
        items.push_back(dictionary[rank]);
    }
    return Trace(std::move(items), zipf_label(spec));
}

Trace Trace::prefix(std::uint64_t k) const {
    if (k == 0 || k > items_.size()) {
        throw std::invalid_argument("Trace::prefix: k out of range");
    }
    std::vector<FlowKey> head(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(k));
    return Trace(std::move(head), label_ + "_first" + std::to_string(k));
}

void Trace::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("Trace::save: cannot open " + path);
    }
    for (const FlowKey& key : items_) {
        const std::string& bytes = key.bytes();
        if (bytes.find('\n') != std::string::npos ||
            bytes.find('\r') != std::string::npos) {
            throw std::runtime_error("Trace::save: key contains a line break");
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.put('\n');
    }
    if (!out) {
        throw std::runtime_error("Trace::save: write failure on " + path);
    }
}

}  // namespace sketchbench

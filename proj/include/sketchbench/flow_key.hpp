#pragma once
// FlowKey: the opaque identifier whose frequency is estimated. Equality is
// byte-wise; the bytes are typically a textual 5-tuple or a decimal integer.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sketchbench/hashing.hpp"

namespace sketchbench {

class FlowKey {
public:
    explicit FlowKey(std::string bytes) : bytes_(std::move(bytes)) {
        if (bytes_.empty()) {
            throw std::invalid_argument("FlowKey: empty byte sequence");
        }
    }

    static FlowKey from_uint(std::uint64_t v) { return FlowKey(std::to_string(v)); }

    const std::string& bytes() const noexcept { return bytes_; }
    std::size_t size() const noexcept { return bytes_.size(); }

    std::uint64_t hash(Seed seed) const noexcept {
        return hash_bytes(bytes_.data(), bytes_.size(), seed);
    }

    friend bool operator==(const FlowKey& a, const FlowKey& b) noexcept {
        return a.bytes_ == b.bytes_;
    }
    friend bool operator!=(const FlowKey& a, const FlowKey& b) noexcept {
        return !(a == b);
    }

private:
    std::string bytes_;
};

}  // namespace sketchbench

template <>
struct std::hash<sketchbench::FlowKey> {
    std::size_t operator()(const sketchbench::FlowKey& k) const noexcept {
        return std::hash<std::string>{}(k.bytes());
    }
};

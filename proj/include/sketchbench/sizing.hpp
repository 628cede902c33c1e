#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace sketchbench {

// ceil for sizing formulas. The 1e-9 slack keeps quantities that are
// integers up to floating-point rounding (ln(1/delta) at delta = 1/e,
// 1/epsilon at epsilon = 0.01) from spilling into the next integer.
inline std::uint64_t ceil_count(double x) {
    if (!(x > 0.0)) {
        throw std::invalid_argument("ceil_count: non-positive size");
    }
    double c = std::ceil(x - 1e-9);
    return c < 1.0 ? 1 : static_cast<std::uint64_t>(c);
}

}  // namespace sketchbench

// Shared fixtures for the unit tests.

#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/rng.hpp"

namespace qwalk::testing {

inline std::vector<NonRepeatingParams> seeded_params(int count, std::uint64_t seed) {
    std::vector<NonRepeatingParams> out;
    Rng rng(seed);
    for (int i = 0; i < count; ++i) out.push_back(random_params(rng));
    return out;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
    double d = 0;
    for (int i = 0; i < 16; ++i) d = std::max(d, std::abs(a.a[static_cast<std::size_t>(i)] - b.a[static_cast<std::size_t>(i)]));
    return d;
}

}  // namespace qwalk::testing

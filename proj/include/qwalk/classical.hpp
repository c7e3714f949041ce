// classical.hpp
// Classical lattice-walk baselines: non-reversal Monte Carlo and exact
// enumeration of self-avoiding and non-reversal paths on Z^2.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qwalk/lattice.hpp"

namespace qwalk {

inline constexpr int kMaxEnumerationSteps = 16;

// Moves use the coin-channel labels; the inverse of channel c is 3 - c.
inline constexpr CoinChannel inverse(CoinChannel c) { return static_cast<CoinChannel>(3 - index_of(c)); }

struct Site {
    int x = 0, y = 0;
    friend bool operator==(const Site&, const Site&) = default;
};

struct LatticePath {
    std::vector<CoinChannel> steps;

    // Sites from the origin, steps.size() + 1 entries.
    std::vector<Site> visited() const;
    Site endpoint() const;
    bool is_non_reversal() const;
    bool is_self_avoiding() const;
};

struct WalkEnsembleStats {
    int n = 0;
    std::uint64_t samples = 0;
    double mean_sq_displacement = 0;
    double std_error = 0;
    std::uint64_t seed = 0;
};

enum class PathKind { self_avoiding, non_reversal };

std::string_view to_string(PathKind k);
PathKind path_kind_from_string(std::string_view s);

// First move uniform over four directions, later moves uniform over the three
// that do not undo the previous one. Deterministic per seed.
LatticePath sample_non_reversal(int n, std::uint64_t seed);

// Monte Carlo mean of |endpoint|^2 over `samples` walks (at least 100).
// Samples are drawn in blocks of 1024, block b from sub-stream b of `seed`,
// so results do not depend on the thread count.
WalkEnsembleStats msd_estimate(int n, std::uint64_t samples, std::uint64_t seed);

// Exact count of n-step paths from the origin, by depth-first backtracking.
// Throws std::invalid_argument for n outside 0..16.
std::uint64_t enumerate(PathKind kind, int n);

// Exact mean of |endpoint|^2 over all n-step paths of the given kind.
double exact_mean_sq_displacement(PathKind kind, int n);

}  // namespace qwalk

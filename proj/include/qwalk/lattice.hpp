// lattice.hpp
// Wave field of a four-state walker on Z^2 and its coin-then-shift evolution.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/probability_field.hpp"

namespace qwalk {

// Coin channels in component order. Each channel is associated with the
// direction its amplitude moves during the shift.
enum class CoinChannel : int { x_plus = 0, y_plus = 1, y_minus = 2, x_minus = 3 };

inline constexpr std::array<CoinChannel, 4> kChannels = {
    CoinChannel::x_plus, CoinChannel::y_plus, CoinChannel::y_minus, CoinChannel::x_minus};

inline constexpr int index_of(CoinChannel c) { return static_cast<int>(c); }

// Lattice displacement applied to a channel by the shift.
inline constexpr std::array<int, 2> displacement(CoinChannel c) {
    switch (c) {
        case CoinChannel::x_plus: return {1, 0};
        case CoinChannel::y_plus: return {0, 1};
        case CoinChannel::y_minus: return {0, -1};
        case CoinChannel::x_minus: return {-1, 0};
    }
    return {0, 0};
}

// Coin state of a walker localised at the origin.
class InitialCoinState {
public:
    // Throws std::invalid_argument when | ||v|| - 1 | > 1e-9.
    explicit InitialCoinState(std::array<cplx, 4> components);

    const std::array<cplx, 4>& components() const { return c_; }
    cplx operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    static InitialCoinState basis(CoinChannel c);
    static InitialCoinState separable();  // (1, i, i, -1) / 2
    static InitialCoinState grover_ring();  // (1, -1, -1, 1) / 2

private:
    std::array<cplx, 4> c_;
};

// Dense amplitude field over the square |x|, |y| <= extent, four channels
// per site. extent is the step budget: evolution past it is an error.
class WalkerState {
public:
    WalkerState(int extent, int t);

    int t() const { return t_; }
    int extent() const { return extent_; }
    std::size_t side() const { return static_cast<std::size_t>(2 * extent_ + 1); }

    bool contains(int x, int y) const {
        return x >= -extent_ && x <= extent_ && y >= -extent_ && y <= extent_;
    }

    cplx amplitude(int x, int y, CoinChannel c) const {
        return contains(x, y) ? amp_[index(x, y) + static_cast<std::size_t>(index_of(c))] : cplx{};
    }
    cplx& at(int x, int y, CoinChannel c) {
        return amp_[index(x, y) + static_cast<std::size_t>(index_of(c))];
    }

    // Site-major, four channels contiguous per site, x as the slow index.
    const std::vector<cplx>& raw() const { return amp_; }

    double norm_squared() const;

private:
    friend class Evolver;

    std::size_t index(int x, int y) const {
        return (static_cast<std::size_t>(x + extent_) * side() + static_cast<std::size_t>(y + extent_)) * 4;
    }

    int extent_;
    int t_;
    std::vector<cplx> amp_;
};

// Walker at the origin at t = 0 with room for step_budget steps.
WalkerState init_walker(const InitialCoinState& state, int step_budget);

WalkerState step(const WalkerState& state, const CoinMatrix& coin);

// Applies step() `steps` times using a reusable scratch buffer.
// Throws std::out_of_range if state.t() + steps exceeds the step budget.
WalkerState evolve(WalkerState state, const CoinMatrix& coin, int steps);

// Like evolve, calling observe(state) on the input and after every step.
WalkerState evolve_observed(WalkerState state, const CoinMatrix& coin, int steps,
                            const std::function<void(const WalkerState&)>& observe);

ProbabilityField probability(const WalkerState& state);

}  // namespace qwalk

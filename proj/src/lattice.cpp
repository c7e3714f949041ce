#include "qwalk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qwalk/numeric.hpp"

namespace qwalk {

ProbabilityField::ProbabilityField(int extent, int t, std::vector<double> values)
    : extent_(extent), t_(t), p_(std::move(values)) {
    if (p_.size() != side() * side()) throw std::invalid_argument("ProbabilityField: size does not match extent");
}

double ProbabilityField::total() const {
    CompensatedSum s;
    for (double v : p_) s.add(v);
    return s.value();
}

InitialCoinState::InitialCoinState(std::array<cplx, 4> components) : c_(components) {
    double n = 0;
    for (const auto& v : c_) n += std::norm(v);
    if (!std::isfinite(n) || std::abs(std::sqrt(n) - 1.0) > 1e-9)
        throw std::invalid_argument("initial coin state is not normalised (norm^2 = " + std::to_string(n) + ")");
}

InitialCoinState InitialCoinState::basis(CoinChannel c) {
    std::array<cplx, 4> v{};
    v[static_cast<std::size_t>(index_of(c))] = 1.0;
    return InitialCoinState(v);
}

InitialCoinState InitialCoinState::separable() {
    return InitialCoinState({cplx(0.5), cplx(0, 0.5), cplx(0, 0.5), cplx(-0.5)});
}

InitialCoinState InitialCoinState::grover_ring() {
    return InitialCoinState({cplx(0.5), cplx(-0.5), cplx(-0.5), cplx(0.5)});
}

WalkerState::WalkerState(int extent, int t) : extent_(extent), t_(t) {
    if (extent < 0) throw std::invalid_argument("WalkerState: negative extent");
    amp_.assign(side() * side() * 4, cplx{});
}

double WalkerState::norm_squared() const {
    CompensatedSum s;
    for (const auto& v : amp_) s.add(std::norm(v));
    return s.value();
}

WalkerState init_walker(const InitialCoinState& state, int step_budget) {
    WalkerState w(step_budget, 0);
    for (auto c : kChannels) w.at(0, 0, c) = state[index_of(c)];
    return w;
}

// Double-buffered stepping. Only the light-cone square with the right
// parity is visited; everything else is zero by construction.
class Evolver {
public:
    Evolver(WalkerState state, const CoinMatrix& coin) : cur_(std::move(state)), next_(cur_), coin_(coin.entries()) {}

    void step() {
        const int t = cur_.t_;
        if (t + 1 > cur_.extent_)
            throw std::out_of_range("evolve: step " + std::to_string(t + 1) + " exceeds lattice step budget " +
                                    std::to_string(cur_.extent_));
        // Sites written this step lie within |x|,|y| <= t+1; clear that square.
        clear_square(next_, t + 1);

        const cplx* u = coin_.a.data();
        const std::ptrdiff_t row = static_cast<std::ptrdiff_t>(cur_.side()) * 4;
        for (int x = -t; x <= t; ++x) {
            // parity: x + y + t even
            for (int y = -t + std::abs(x) % 2; y <= t; y += 2) {
                const cplx* v = &cur_.amp_[cur_.index(x, y)];
                if (v[0] == cplx{} && v[1] == cplx{} && v[2] == cplx{} && v[3] == cplx{}) continue;
                cplx* base = &next_.amp_[next_.index(x, y)];
                // out_i = sum_j C_ij v_j, then channel i moves by its displacement
                base[row + 0] = u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
                base[4 + 1] = u[4] * v[0] + u[5] * v[1] + u[6] * v[2] + u[7] * v[3];
                base[-4 + 2] = u[8] * v[0] + u[9] * v[1] + u[10] * v[2] + u[11] * v[3];
                base[-row + 3] = u[12] * v[0] + u[13] * v[1] + u[14] * v[2] + u[15] * v[3];
            }
        }
        next_.t_ = t + 1;
        std::swap(cur_, next_);
    }

    const WalkerState& current() const { return cur_; }
    WalkerState take() && { return std::move(cur_); }

private:
    static void clear_square(WalkerState& w, int r) {
        for (int x = -r; x <= r; ++x) {
            auto first = w.amp_.begin() + static_cast<std::ptrdiff_t>(w.index(x, -r));
            std::fill(first, first + static_cast<std::ptrdiff_t>(4 * (2 * r + 1)), cplx{});
        }
    }

    WalkerState cur_;
    WalkerState next_;
    Mat4 coin_;
};

WalkerState step(const WalkerState& state, const CoinMatrix& coin) {
    Evolver e(state, coin);
    e.step();
    return std::move(e).take();
}

WalkerState evolve(WalkerState state, const CoinMatrix& coin, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve: negative step count");
    if (steps == 0) return state;
    if (state.t() + steps > state.extent())
        throw std::out_of_range("evolve: " + std::to_string(state.t() + steps) +
                                " steps exceed lattice step budget " + std::to_string(state.extent()));
    Evolver e(std::move(state), coin);
    for (int i = 0; i < steps; ++i) e.step();
    return std::move(e).take();
}

WalkerState evolve_observed(WalkerState state, const CoinMatrix& coin, int steps,
                            const std::function<void(const WalkerState&)>& observe) {
    if (steps < 0) throw std::invalid_argument("evolve: negative step count");
    if (state.t() + steps > state.extent())
        throw std::out_of_range("evolve: " + std::to_string(state.t() + steps) +
                                " steps exceed lattice step budget " + std::to_string(state.extent()));
    observe(state);
    Evolver e(std::move(state), coin);
    for (int i = 0; i < steps; ++i) {
        e.step();
        observe(e.current());
    }
    return std::move(e).take();
}

ProbabilityField probability(const WalkerState& state) {
    const auto& a = state.raw();
    std::vector<double> out(a.size() / 4);
    for (std::size_t s = 0; s < out.size(); ++s)
        out[s] = std::norm(a[4 * s]) + std::norm(a[4 * s + 1]) + std::norm(a[4 * s + 2]) + std::norm(a[4 * s + 3]);
    return ProbabilityField(state.extent(), state.t(), std::move(out));
}

}  // namespace qwalk

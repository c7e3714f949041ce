// probability_field.hpp
// Site-occupation probabilities on a square window centred on the origin.

#pragma once

#include <cstddef>
#include <vector>

namespace qwalk {

class ProbabilityField {
public:
    ProbabilityField() = default;
    ProbabilityField(int extent, int t) : extent_(extent), t_(t), p_(side() * side(), 0.0) {}
    // values must hold side()*side() entries in values() order.
    ProbabilityField(int extent, int t, std::vector<double> values);

    int extent() const { return extent_; }
    int t() const { return t_; }
    std::size_t side() const { return static_cast<std::size_t>(2 * extent_ + 1); }

    bool contains(int x, int y) const {
        return x >= -extent_ && x <= extent_ && y >= -extent_ && y <= extent_;
    }
    double at(int x, int y) const { return contains(x, y) ? p_[index(x, y)] : 0.0; }
    double& operator()(int x, int y) { return p_[index(x, y)]; }

    // Row-major with x as the slow index.
    const std::vector<double>& values() const { return p_; }

    double total() const;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(x + extent_) * side() + static_cast<std::size_t>(y + extent_);
    }

    int extent_ = 0;
    int t_ = 0;
    std::vector<double> p_;
};

}  // namespace qwalk

#include "qwalk/analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qwalk/numeric.hpp"

namespace qwalk {

namespace {

void check_degree(int xi, int chi) {
    if (xi < 0 || chi < 0 || xi + chi > kMaxMomentDegree)
        throw std::invalid_argument("moment exponents (" + std::to_string(xi) + "," + std::to_string(chi) +
                                    ") outside supported total degree 0.." + std::to_string(kMaxMomentDegree));
}

template <class F>
double weighted_sum(const ProbabilityField& p, F&& weight) {
    CompensatedSum s;
    const int e = p.extent();
    const auto& v = p.values();
    std::size_t i = 0;
    for (int x = -e; x <= e; ++x)
        for (int y = -e; y <= e; ++y, ++i)
            if (v[i] != 0.0) s.add(v[i] * weight(x, y));
    return s.value();
}

}  // namespace

double mean_radial(const ProbabilityField& p) {
    return weighted_sum(p, [](int x, int y) { return std::sqrt(double(x) * x + double(y) * y); });
}

double std_radial(const ProbabilityField& p) {
    // two-pass form: sum p (r - <r>)^2, which equals <r^2> - <r>^2 for a
    // normalised field without the cancellation
    const double m = mean_radial(p);
    const double var = weighted_sum(p, [m](int x, int y) {
        const double d = std::sqrt(double(x) * x + double(y) * y) - m;
        return d * d;
    });
    if (!(var >= 0)) throw std::logic_error("std_radial: invalid variance " + std::to_string(var));
    return std::sqrt(var);
}

double joint_moment(const ProbabilityField& p, int xi, int chi) {
    check_degree(xi, chi);
    if (xi == 0 && chi == 0) return p.total();
    return weighted_sum(p, [=](int x, int y) { return ipow(x, xi) * ipow(y, chi); });
}

double rotated_joint_moment(const ProbabilityField& p, int xi, int chi) {
    check_degree(xi, chi);
    return weighted_sum(p, [=](int x, int y) { return ipow(x + y, xi) * ipow(x - y, chi); });
}

int support_bound(CoinFamily family, int t) {
    if (family == CoinFamily::non_repeating) return (t + 1) / 2;
    return t;
}

bool support_check(const WalkerState& state, CoinFamily family) {
    const int bound = support_bound(family, state.t());
    const int e = state.extent();
    for (int x = -e; x <= e; ++x)
        for (int y = -e; y <= e; ++y) {
            if (std::max(std::abs(x), std::abs(y)) <= bound) continue;
            for (auto c : kChannels)
                if (state.amplitude(x, y, c) != cplx{}) return false;
        }
    return true;
}

MomentReport moment_report(const ProbabilityField& p, int max_degree) {
    if (max_degree < 0 || max_degree > kMaxMomentDegree)
        throw std::invalid_argument("moment_report: degree out of range");
    MomentReport r;
    r.mean_r = mean_radial(p);
    r.sigma_r = std_radial(p);
    for (int d = 0; d <= max_degree; ++d)
        for (int xi = d; xi >= 0; --xi) r.joint[{xi, d - xi}] = joint_moment(p, xi, d - xi);
    return r;
}

}  // namespace qwalk

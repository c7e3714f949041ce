#include "qwalk/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qwalk/numeric.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

cplx expi(double a) { return std::polar(1.0, a); }

cplx det3(const Mat4& m, int r0, int r1, int r2) {
    auto e = [&](int r, int c) { return m(r, c); };
    return e(r0, r0) * (e(r1, r1) * e(r2, r2) - e(r1, r2) * e(r2, r1)) -
           e(r0, r1) * (e(r1, r0) * e(r2, r2) - e(r1, r2) * e(r2, r0)) +
           e(r0, r2) * (e(r1, r0) * e(r2, r1) - e(r1, r1) * e(r2, r0));
}

// Determinant of the 3x3 submatrix with rows `rows` and columns `cols`.
cplx minor3(const Mat4& m, const int rows[3], const int cols[3]) {
    auto e = [&](int r, int c) { return m(rows[r], cols[c]); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

cplx det4(const Mat4& m) {
    // cofactor expansion along row 0
    cplx d = 0;
    const int rows[3] = {1, 2, 3};
    for (int c = 0; c < 4; ++c) {
        int cols[3], n = 0;
        for (int j = 0; j < 4; ++j)
            if (j != c) cols[n++] = j;
        const cplx term = m(0, c) * minor3(m, rows, cols);
        d += (c % 2 == 0) ? term : -term;
    }
    return d;
}

struct Angles {
    double theta1, theta2, theta3;
};

Angles band_angles(const NonRepeatingParams& p, MomentumPoint k) {
    const DerivedInvariants m = derived_invariants(p);
    return {m.m1 - k.kx + k.ky, m.m2 - k.kx - k.ky, m.m3};
}

}  // namespace

Mat4 u_momentum(const CoinMatrix& coin, MomentumPoint k) {
    const cplx phase[4] = {expi(k.kx), expi(k.ky), expi(-k.ky), expi(-k.kx)};
    Mat4 u = coin.entries();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) u(r, c) *= phase[r];
    return u;
}

Quartic characteristic_polynomial(const Mat4& m) {
    cplx trace = 0, minors2 = 0, minors3 = 0;
    for (int i = 0; i < 4; ++i) trace += m(i, i);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) minors2 += m(i, i) * m(j, j) - m(i, j) * m(j, i);
    for (int skip = 0; skip < 4; ++skip) {
        int r[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) r[n++] = i;
        minors3 += det3(m, r[0], r[1], r[2]);
    }
    return {det4(m), -minors3, minors2, -trace, cplx(1)};
}

Quartic NonRepeatingQuartic::coefficients() const { return {cplx(1), cplx(0), cplx(a), cplx(0), cplx(1)}; }

Quartic NonReversalQuartic::coefficients() const { return {cplx(1), std::conj(delta), cplx(xi), delta, cplx(1)}; }

double band_parameter(const NonRepeatingParams& p, MomentumPoint k) {
    const Angles th = band_angles(p, k);
    const double f = p.f();
    return p.gamma * p.gamma * std::cos(th.theta1) - p.lambda * p.lambda * std::cos(th.theta2) -
           f * f * std::cos(th.theta3);
}

NonRepeatingQuartic char_quartic_nonrepeating(const NonRepeatingParams& p, MomentumPoint k) {
    return {2 * band_parameter(p, k)};
}

NonReversalQuartic char_quartic_nonreversal(const NonRepeatingParams& p, MomentumPoint k) {
    const double f = p.f(), th = p.theta, kx = k.kx, ky = k.ky;
    const double b1 = p.alpha + p.phi - th;
    const double b2 = p.beta + p.psi - th;
    NonReversalQuartic q;
    q.delta = f * (expi(b1 - ky) + expi(b2 + ky) - expi(-(b1 + b2 + th + kx)) - expi(th + kx));
    q.xi = 2 * (f * f * std::cos(b1 + b2) + (p.lambda * p.lambda - 1) * std::cos(kx + ky + b2 + th) +
                (p.gamma * p.gamma - 1) * std::cos(kx - ky + b1 + th));
    return q;
}

std::array<cplx, 4> EigenPhase::eigenvalues() const {
    const cplx e = expi(omega);
    return {e, -e, std::conj(e), -std::conj(e)};
}

EigenPhase omega_from_b(double b) {
    if (!(std::abs(b) <= 1 + 1e-12))
        throw std::logic_error("omega: band parameter |b| = " + std::to_string(std::abs(b)) + " exceeds 1");
    return {0.5 * std::acos(std::clamp(-b, -1.0, 1.0)), b};
}

EigenPhase omega(const NonRepeatingParams& p, MomentumPoint k) { return omega_from_b(band_parameter(p, k)); }

OmegaGradient grad_omega(const NonRepeatingParams& p, MomentumPoint k) {
    const Angles th = band_angles(p, k);
    const double g2 = p.gamma * p.gamma, l2 = p.lambda * p.lambda, f = p.f();
    const double b = g2 * std::cos(th.theta1) - l2 * std::cos(th.theta2) - f * f * std::cos(th.theta3);
    if (std::abs(b) >= 1 - 1e-9)
        throw BandEdgeError("grad_omega: node at band edge (|b| = " + std::to_string(std::abs(b)) + ")");
    const double db_dkx = g2 * std::sin(th.theta1) - l2 * std::sin(th.theta2);
    const double db_dky = -g2 * std::sin(th.theta1) - l2 * std::sin(th.theta2);
    // omega = acos(-b)/2  =>  d omega/db = 1 / (2 sqrt(1 - b^2))
    const double dw_db = 0.5 / std::sqrt(1 - b * b);
    return {dw_db * db_dkx, dw_db * db_dky};
}

MomentumPoint quadrature_node(int i, int j, int grid) {
    const double h = 2 * kPi / grid;
    return {-kPi + (i + 0.5) * h, -kPi + (j + 0.5) * h};
}

double asymptotic_even_moment(const NonRepeatingParams& p, int xi, int chi, int grid) {
    if (xi < 0 || chi < 0 || (xi + chi) % 2 != 0)
        throw std::invalid_argument("asymptotic_even_moment: requires non-negative exponents with even sum");
    if (grid < 1) throw std::invalid_argument("asymptotic_even_moment: grid must be positive");
    if (xi == 0 && chi == 0) return 1.0;

    std::vector<double> rows(static_cast<std::size_t>(grid));
    parallel_for(rows.size(), [&](std::size_t i) {
        CompensatedSum s;
        for (int j = 0; j < grid; ++j) {
            const OmegaGradient g = grad_omega(p, quadrature_node(static_cast<int>(i), j, grid));
            s.add(ipow(g.dkx, xi) * ipow(g.dky, chi));
        }
        rows[i] = s.value();
    });
    CompensatedSum total;
    for (double r : rows) total.add(r);
    return total.value() / (double(grid) * grid);
}

std::array<cplx, 4> quartic_roots(const Quartic& q) {
    if (std::abs(q[4] - cplx(1)) > 1e-14) throw std::invalid_argument("quartic_roots: polynomial is not monic");
    auto eval = [&](cplx z) { return (((z + q[3]) * z + q[2]) * z + q[1]) * z + q[0]; };
    auto deriv = [&](cplx z) { return ((4.0 * z + 3.0 * q[3]) * z + 2.0 * q[2]) * z + q[1]; };

    std::array<cplx, 4> r;
    const cplx seed(0.4, 0.9);
    r[0] = 1;
    for (int i = 1; i < 4; ++i) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i - 1)] * seed;
    for (int iter = 0; iter < 1000; ++iter) {
        double moved = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            cplx denom = 1;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != i) denom *= r[i] - r[j];
            if (denom == cplx{}) denom = 1e-300;
            const cplx dz = eval(r[i]) / denom;
            r[i] -= dz;
            moved = std::max(moved, std::abs(dz));
        }
        if (moved < 1e-15) break;
    }
    for (auto& z : r)
        for (int iter = 0; iter < 3; ++iter) {
            const cplx d = deriv(z);
            if (std::abs(d) < 1e-8) break;  // near-double root: DK result is as good as it gets
            const cplx candidate = z - eval(z) / d;
            if (std::abs(eval(candidate)) >= std::abs(eval(z))) break;
            z = candidate;
        }
    return r;
}

std::array<cplx, 4> nonreversal_eigenvalues(const NonRepeatingParams& p, MomentumPoint k) {
    return quartic_roots(char_quartic_nonreversal(p, k).coefficients());
}

namespace {

template <class F>
double map_defect(const std::array<cplx, 4>& roots, F&& f) {
    double worst = 0;
    for (const auto& r : roots) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& s : roots) best = std::min(best, std::abs(f(r) - s));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double negation_defect(const std::array<cplx, 4>& roots) {
    return map_defect(roots, [](cplx z) { return -z; });
}

double conjugation_defect(const std::array<cplx, 4>& roots) {
    return map_defect(roots, [](cplx z) { return std::conj(z); });
}

}  // namespace qwalk

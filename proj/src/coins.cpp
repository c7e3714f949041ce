#include "qwalk/coins.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

cplx expi(double a) { return std::polar(1.0, a); }

}  // namespace

Mat4 Mat4::identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4 Mat4::adjoint() const {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
}

Mat4 operator*(const Mat4& lhs, const Mat4& rhs) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += lhs(r, k) * rhs(k, c);
            m(r, c) = s;
        }
    return m;
}

Mat4 operator*(cplx s, const Mat4& m) {
    Mat4 out = m;
    for (auto& v : out.a) v *= s;
    return out;
}

std::string_view to_string(CoinFamily f) {
    switch (f) {
        case CoinFamily::hadamard4: return "hadamard4";
        case CoinFamily::grover4: return "grover4";
        case CoinFamily::dft4: return "dft4";
        case CoinFamily::non_repeating: return "non_repeating";
        case CoinFamily::non_reversal: return "non_reversal";
    }
    return "unknown";
}

CoinFamily coin_family_from_string(std::string_view s) {
    for (auto f : {CoinFamily::hadamard4, CoinFamily::grover4, CoinFamily::dft4,
                   CoinFamily::non_repeating, CoinFamily::non_reversal})
        if (to_string(f) == s) return f;
    throw std::invalid_argument("unknown coin family '" + std::string(s) + "'");
}

double NonRepeatingParams::f() const {
    const double r = 1.0 - (lambda * lambda + gamma * gamma);
    return r > 0 ? std::sqrt(r) : 0.0;
}

bool NonRepeatingParams::valid() const {
    return std::isfinite(lambda) && std::isfinite(gamma) &&
           lambda * lambda + gamma * gamma <= 1.0 + 1e-15;
}

NonRepeatingParams NonRepeatingParams::example_c1() {
    NonRepeatingParams p;
    p.theta = p.phi = 3 * kPi / 4;
    p.alpha = p.beta = p.delta = p.psi = -kPi / 4;
    p.lambda = p.gamma = 1.0 / std::sqrt(3.0);
    return p;
}

CoinMatrix build_standard(CoinFamily kind) {
    const cplx h = 0.5, i2 = cplx(0, 0.5);
    Mat4 m;
    switch (kind) {
        case CoinFamily::hadamard4: {
            const int s[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) m(r, c) = double(s[r][c]) * h;
            break;
        }
        case CoinFamily::grover4:
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) m(r, c) = r == c ? -h : h;
            break;
        case CoinFamily::dft4: {
            // entry (r,c) = i^{rc} / 2
            const cplx powers[4] = {h, i2, -h, -i2};
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) m(r, c) = powers[(r * c) % 4];
            break;
        }
        default:
            throw std::invalid_argument("build_standard: '" + std::string(to_string(kind)) +
                                        "' is a parametrised family");
    }
    return CoinMatrix(m, kind);
}

CoinMatrix build_non_repeating(const NonRepeatingParams& p) {
    if (!p.valid())
        throw std::invalid_argument("build_non_repeating: lambda^2 + gamma^2 must not exceed 1");
    const double a = p.alpha, b = p.beta, d = p.delta, s = p.psi, ph = p.phi, th = p.theta;
    const double l = p.lambda, g = p.gamma, f = p.f();

    Mat4 m;  // diagonal stays exactly zero
    m(0, 1) = l * expi(a);
    m(0, 2) = g * expi(b);
    m(0, 3) = f * expi(th);

    m(1, 0) = l * expi(-(ph + d + a));
    m(1, 2) = -f * expi(s - th + b);
    m(1, 3) = g * expi(s);

    m(2, 0) = -g * expi(-(d + a + s));
    m(2, 1) = -f * expi(ph - th + a);
    m(2, 3) = l * expi(ph);

    m(3, 0) = f * expi(th - a - s - ph - b);
    m(3, 1) = -g * expi(d + a - b);
    m(3, 2) = l * expi(d);
    return CoinMatrix(m, CoinFamily::non_repeating);
}

CoinMatrix build_non_reversal(const NonRepeatingParams& p) {
    const Mat4 rep = build_non_repeating(p).entries();
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = rep(r, 3 - c);
    return CoinMatrix(m, CoinFamily::non_reversal);
}

double wrap_angle(double a) {
    double r = std::remainder(a, 2 * kPi);  // [-pi, pi]
    if (r <= -kPi) r += 2 * kPi;
    return r;
}

DerivedInvariants derived_invariants(const NonRepeatingParams& p) {
    return {wrap_angle(p.alpha - p.beta + p.delta + p.psi), wrap_angle(p.phi + p.delta),
            wrap_angle(p.phi + p.alpha - 2 * p.theta + p.psi + p.beta)};
}

double check_unitary(const Mat4& m) {
    const Mat4 g = m.adjoint() * m;
    double worst = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            worst = std::max(worst, std::abs(g(r, c) - (r == c ? cplx(1) : cplx(0))));
    return worst;
}

}  // namespace qwalk

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qwalk/coins.hpp"
#include "test_helpers.hpp"

using namespace qwalk;
using qwalk::testing::max_abs_diff;
using qwalk::testing::seeded_params;

namespace {

constexpr double kPi = std::numbers::pi;

Mat4 from_ints(const int (&s)[4][4], cplx scale) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = double(s[r][c]) * scale;
    return m;
}

}  // namespace

TEST_CASE("standard coins match their printed matrices") {
    const int h[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    const int g[4][4] = {{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}};
    CHECK(max_abs_diff(build_standard(CoinFamily::hadamard4).entries(), from_ints(h, 0.5)) == 0.0);
    CHECK(max_abs_diff(build_standard(CoinFamily::grover4).entries(), from_ints(g, 0.5)) == 0.0);

    const CoinMatrix d = build_standard(CoinFamily::dft4);
    CHECK(d(1, 0) == cplx(0.5, 0));
    CHECK(d(1, 1) == cplx(0, 0.5));
    CHECK(d(1, 2) == cplx(-0.5, 0));
    CHECK(d(1, 3) == cplx(0, -0.5));
    CHECK(d(3, 3) == cplx(0, 0.5));

    for (auto f : {CoinFamily::hadamard4, CoinFamily::grover4, CoinFamily::dft4})
        CHECK(check_unitary(build_standard(f)) == 0.0);
    CHECK_THROWS_AS(build_standard(CoinFamily::non_reversal), std::invalid_argument);
}

TEST_CASE("check_unitary residual of a scaled Grover coin") {
    const Mat4 scaled = cplx(1.01) * build_standard(CoinFamily::grover4).entries();
    // (1.01^2 - 1) on the diagonal
    CHECK(check_unitary(scaled) == doctest::Approx(0.0201).epsilon(1e-12));
}

TEST_CASE("non-repeating coin with lambda = 1 is a pair of swaps") {
    NonRepeatingParams p;
    p.lambda = 1;
    const CoinMatrix c = build_non_repeating(p);
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) {
            const bool paired = (r ^ col) == 1;  // (0,1) (1,0) (2,3) (3,2)
            CHECK(std::abs(c(r, col)) == doctest::Approx(paired ? 1.0 : 0.0));
        }
}

TEST_CASE("example parameter set reproduces the printed non-reversal coin") {
    const NonRepeatingParams p = NonRepeatingParams::example_c1();
    const int s[4][4] = {{-1, 1, 1, 0}, {1, 1, 0, 1}, {-1, 0, -1, 1}, {0, 1, -1, -1}};
    const Mat4 expected = from_ints(s, std::polar(1.0, -kPi / 4) / std::sqrt(3.0));
    const CoinMatrix rev = build_non_reversal(p);
    CHECK(max_abs_diff(rev.entries(), expected) < 1e-15);
    CHECK(check_unitary(expected) <= 1e-15);
    CHECK(rev.family() == CoinFamily::non_reversal);

    // Up to the dropped global phase the matrix is real with entries in {0, +-1/sqrt 3}
    const Mat4 dephased = std::polar(1.0, kPi / 4) * rev.entries();
    for (const auto& v : dephased.a) CHECK(std::abs(v.imag()) < 1e-15);
}

TEST_CASE("non-reversal columns are reversed non-repeating columns") {
    for (const auto& p : seeded_params(50, 11)) {
        const CoinMatrix rep = build_non_repeating(p);
        const CoinMatrix rev = build_non_reversal(p);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(rev(r, c) == rep(r, 3 - c));
    }
}

TEST_CASE("parametrised coins: unitary with exact structural zeros over 1000 draws") {
    double worst_rep = 0, worst_rev = 0;
    for (const auto& p : seeded_params(1000, 2024)) {
        const CoinMatrix rep = build_non_repeating(p);
        const CoinMatrix rev = build_non_reversal(p);
        worst_rep = std::max(worst_rep, check_unitary(rep));
        worst_rev = std::max(worst_rev, check_unitary(rev));
        for (int i = 0; i < 4; ++i) {
            REQUIRE(rep(i, i) == cplx(0, 0));
            REQUIRE(rev(i, 3 - i) == cplx(0, 0));
        }
    }
    CHECK(worst_rep <= 1e-12);
    CHECK(worst_rev <= 1e-12);
}

TEST_CASE("lambda^2 + gamma^2 > 1 is rejected") {
    NonRepeatingParams p;
    p.lambda = 0.8;
    p.gamma = 0.7;
    CHECK_THROWS_AS(build_non_repeating(p), std::invalid_argument);
    CHECK_THROWS_AS(build_non_reversal(p), std::invalid_argument);
    p.gamma = 0.6;  // exactly on the circle
    CHECK(p.f() <= 1e-7);
    CHECK_NOTHROW(build_non_repeating(p));
}

TEST_CASE("derived invariants") {
    const DerivedInvariants zero = derived_invariants(NonRepeatingParams{});
    CHECK(zero.m1 == 0.0);
    CHECK(zero.m2 == 0.0);
    CHECK(zero.m3 == 0.0);

    // m1 = -pi/4 + pi/4 - pi/4 - pi/4, m2 = 3pi/4 - pi/4,
    // m3 = 3pi/4 - pi/4 - 3pi/2 - pi/4 - pi/4 = -3pi/2 = pi/2 (mod 2pi)
    const DerivedInvariants c1 = derived_invariants(NonRepeatingParams::example_c1());
    CHECK(c1.m1 == doctest::Approx(-kPi / 2));
    CHECK(c1.m2 == doctest::Approx(kPi / 2));
    CHECK(c1.m3 == doctest::Approx(kPi / 2));
}

TEST_CASE("wrap_angle lands in (-pi, pi]") {
    CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-3 * kPi / 2) == doctest::Approx(kPi / 2));
    CHECK(wrap_angle(0.25) == 0.25);
}

TEST_CASE("invariant-preserving shifts keep (m1, m2, m3)") {
    Rng rng(5);
    for (const auto& p : seeded_params(200, 77)) {
        const NonRepeatingParams q =
            shift_preserving_invariants(p, rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi));
        const DerivedInvariants a = derived_invariants(p), b = derived_invariants(q);
        // compare on the circle
        CHECK(std::abs(wrap_angle(a.m1 - b.m1)) < 1e-12);
        CHECK(std::abs(wrap_angle(a.m2 - b.m2)) < 1e-12);
        CHECK(std::abs(wrap_angle(a.m3 - b.m3)) < 1e-12);
    }
}

TEST_CASE("coin family names round-trip") {
    for (auto f : {CoinFamily::hadamard4, CoinFamily::grover4, CoinFamily::dft4, CoinFamily::non_repeating,
                   CoinFamily::non_reversal})
        CHECK(coin_family_from_string(to_string(f)) == f);
    CHECK_THROWS_AS(coin_family_from_string("hadamard"), std::invalid_argument);
}

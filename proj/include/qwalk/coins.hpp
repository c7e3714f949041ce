// coins.hpp
// 4x4 coin operators for walks on the square lattice.

#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

namespace qwalk {

using cplx = std::complex<double>;

// Dense row-major 4x4 complex matrix.
struct Mat4 {
    std::array<cplx, 16> a{};

    cplx& operator()(int r, int c) { return a[static_cast<size_t>(r * 4 + c)]; }
    const cplx& operator()(int r, int c) const { return a[static_cast<size_t>(r * 4 + c)]; }

    static Mat4 identity();
    Mat4 adjoint() const;
    friend Mat4 operator*(const Mat4& lhs, const Mat4& rhs);
    friend Mat4 operator*(cplx s, const Mat4& m);
};

enum class CoinFamily { hadamard4, grover4, dft4, non_repeating, non_reversal };

std::string_view to_string(CoinFamily f);
CoinFamily coin_family_from_string(std::string_view s);

// Parameters of the zero-diagonal SU(4) coin. Angles in radians.
struct NonRepeatingParams {
    double alpha = 0, beta = 0, delta = 0, psi = 0, phi = 0, theta = 0;
    double lambda = 0, gamma = 0;

    // sqrt(1 - lambda^2 - gamma^2), non-negative branch.
    double f() const;
    bool valid() const;

    // theta = phi = 3pi/4, alpha = beta = delta = psi = -pi/4, lambda = gamma = 1/sqrt(3).
    static NonRepeatingParams example_c1();
};

// The three phase combinations the asymptotic even moments depend on
// (together with lambda and gamma). Each value lies in (-pi, pi].
struct DerivedInvariants {
    double m1 = 0, m2 = 0, m3 = 0;
};

class CoinMatrix {
public:
    CoinMatrix(Mat4 entries, CoinFamily family) : entries_(entries), family_(family) {}

    const Mat4& entries() const { return entries_; }
    CoinFamily family() const { return family_; }
    cplx operator()(int r, int c) const { return entries_(r, c); }

private:
    Mat4 entries_;
    CoinFamily family_;
};

// Hadamard (H (x) H), Grover, or DFT coin; throws for the parametrised families.
CoinMatrix build_standard(CoinFamily kind);

// Throws std::invalid_argument when lambda^2 + gamma^2 > 1.
CoinMatrix build_non_repeating(const NonRepeatingParams& p);

// Non-repeating coin with its columns reversed (right-multiplication by the
// anti-diagonal permutation). Column j is column 3-j of the non-repeating coin.
CoinMatrix build_non_reversal(const NonRepeatingParams& p);

DerivedInvariants derived_invariants(const NonRepeatingParams& p);

// max |(C^dagger C - I)_{ij}|
double check_unitary(const Mat4& m);
inline double check_unitary(const CoinMatrix& c) { return check_unitary(c.entries()); }

// Reduce an angle to (-pi, pi].
double wrap_angle(double a);

}  // namespace qwalk

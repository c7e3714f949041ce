// momentum.hpp
// Fourier-space step operator, closed-form characteristic quartics and the
// eigenphase of the non-repeating walk.

#pragma once

#include <array>
#include <stdexcept>

#include "qwalk/coins.hpp"

namespace qwalk {

inline constexpr int kDefaultQuadratureGrid = 512;

struct MomentumPoint {
    double kx = 0, ky = 0;
};

// Coefficients (c0..c4) of det(p I - M) = c4 p^4 + c3 p^3 + c2 p^2 + c1 p + c0,
// c4 = 1. Index i holds the coefficient of p^i.
using Quartic = std::array<cplx, 5>;

// diag(e^{ikx}, e^{iky}, e^{-iky}, e^{-ikx}) * C
Mat4 u_momentum(const CoinMatrix& coin, MomentumPoint k);

// Characteristic polynomial from sums of principal minors.
Quartic characteristic_polynomial(const Mat4& m);

// p^4 + a p^2 + 1
struct NonRepeatingQuartic {
    double a = 0;
    Quartic coefficients() const;
};

// p^4 + delta p^3 + xi p^2 + conj(delta) p + 1
struct NonReversalQuartic {
    cplx delta;
    double xi = 0;
    Quartic coefficients() const;
};

NonRepeatingQuartic char_quartic_nonrepeating(const NonRepeatingParams& p, MomentumPoint k);
NonReversalQuartic char_quartic_nonreversal(const NonRepeatingParams& p, MomentumPoint k);

// b = gamma^2 cos(m1 - kx + ky) - lambda^2 cos(m2 - kx - ky) - f^2 cos(m3)
double band_parameter(const NonRepeatingParams& p, MomentumPoint k);

struct EigenPhase {
    double omega = 0;  // in [0, pi/2]
    double b = 0;
    // e^{i omega}, -e^{i omega}, e^{-i omega}, -e^{-i omega}
    std::array<cplx, 4> eigenvalues() const;
};

// omega with cos(2 omega) = -b. Throws std::logic_error if |b| > 1 + 1e-12.
EigenPhase omega_from_b(double b);
EigenPhase omega(const NonRepeatingParams& p, MomentumPoint k);

struct OmegaGradient {
    double dkx = 0, dky = 0;
};

class BandEdgeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Analytic gradient of omega. Throws BandEdgeError when |b| >= 1 - 1e-9.
OmegaGradient grad_omega(const NonRepeatingParams& p, MomentumPoint k);

// (2 pi)^{-2} * integral over the Brillouin zone of (d omega/dkx)^xi (d omega/dky)^chi,
// i.e. the leading coefficient of <X^xi Y^chi> ~ c t^(xi+chi). Shifted midpoint
// rule on a grid x grid mesh. Throws std::invalid_argument for odd xi + chi.
double asymptotic_even_moment(const NonRepeatingParams& p, int xi, int chi, int grid = kDefaultQuadratureGrid);

// Midpoint node (i, j) of the grid x grid mesh on [-pi, pi)^2.
MomentumPoint quadrature_node(int i, int j, int grid);

// Roots of a monic quartic: Durand-Kerner iteration followed by Newton polishing.
std::array<cplx, 4> quartic_roots(const Quartic& q);

// Eigenvalues of u_momentum(build_non_reversal(p), k) via quartic_roots.
std::array<cplx, 4> nonreversal_eigenvalues(const NonRepeatingParams& p, MomentumPoint k);

// max over roots r of min_j |f(r) - roots_j|, with f = negation or conjugation.
double negation_defect(const std::array<cplx, 4>& roots);
double conjugation_defect(const std::array<cplx, 4>& roots);

}  // namespace qwalk

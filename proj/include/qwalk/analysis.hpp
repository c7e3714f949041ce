// analysis.hpp
// Radial statistics and joint position moments of a probability field.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/probability_field.hpp"

namespace qwalk {

inline constexpr int kMaxMomentDegree = 8;

enum class MomentMethod { direct, asymptotic };

struct MomentReport {
    double mean_r = 0;
    double sigma_r = 0;
    std::map<std::pair<int, int>, double> joint;  // (xi, chi) -> <X^xi Y^chi>
    MomentMethod method = MomentMethod::direct;
};

// sum p(x,y) sqrt(x^2 + y^2)
double mean_radial(const ProbabilityField& p);

// sqrt(<r^2> - <r>^2), evaluated as sqrt(sum p (r - <r>)^2). A NaN variance
// throws std::logic_error.
double std_radial(const ProbabilityField& p);

// sum p(x,y) x^xi y^chi. Throws std::invalid_argument outside 0 <= xi+chi <= 8.
double joint_moment(const ProbabilityField& p, int xi, int chi);

// sum p(x,y) (x+y)^xi (x-y)^chi
double rotated_joint_moment(const ProbabilityField& p, int xi, int chi);

// Largest max(|x|,|y|) a walk of this family can reach after t steps.
int support_bound(CoinFamily family, int t);

// True iff no probability mass lies outside the family's support square.
bool support_check(const WalkerState& state, CoinFamily family);

// Radial statistics plus every joint moment with xi + chi <= max_degree.
MomentReport moment_report(const ProbabilityField& p, int max_degree);

}  // namespace qwalk

// haar.hpp
// Random coin states for walkers at the origin.

#pragma once

#include <cstdint>
#include <string_view>

#include "qwalk/lattice.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

using HaarState = InitialCoinState;

enum class HaarSampler {
    gaussian,  // normalised complex Gaussian vector: exactly uniform on the unit sphere
    literal,   // hyperspherical angles with phi_i in (0,1] and cos(theta_i) in (0,1] drawn uniformly
};

std::string_view to_string(HaarSampler s);
HaarSampler haar_sampler_from_string(std::string_view s);

HaarState sample_haar_state(Rng& rng, HaarSampler sampler = HaarSampler::gaussian);
HaarState sample_haar_state(std::uint64_t seed, HaarSampler sampler = HaarSampler::gaussian);

// (cos t3, e^{i p3} sin t3 cos t2, e^{i p2} sin t3 sin t2 cos t1, e^{i p1} sin t3 sin t2 sin t1)
HaarState hyperspherical_state(double theta1, double theta2, double theta3, double phi1, double phi2, double phi3);

}  // namespace qwalk

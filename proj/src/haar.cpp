#include "qwalk/haar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

std::string_view to_string(HaarSampler s) { return s == HaarSampler::gaussian ? "gaussian" : "literal"; }

HaarSampler haar_sampler_from_string(std::string_view s) {
    if (s == "gaussian") return HaarSampler::gaussian;
    if (s == "literal") return HaarSampler::literal;
    throw std::invalid_argument("unknown Haar sampler '" + std::string(s) + "'");
}

HaarState hyperspherical_state(double theta1, double theta2, double theta3, double phi1, double phi2, double phi3) {
    const double s3 = std::sin(theta3), s2 = std::sin(theta2);
    return HaarState({cplx(std::cos(theta3)), std::polar(s3 * std::cos(theta2), phi3),
                      std::polar(s3 * s2 * std::cos(theta1), phi2), std::polar(s3 * s2 * std::sin(theta1), phi1)});
}

HaarState sample_haar_state(Rng& rng, HaarSampler sampler) {
    if (sampler == HaarSampler::literal) {
        double th[3], ph[3];
        for (int i = 0; i < 3; ++i) {
            th[i] = std::acos(rng.uniform_open0());
            ph[i] = rng.uniform_open0();
        }
        return hyperspherical_state(th[0], th[1], th[2], ph[0], ph[1], ph[2]);
    }
    std::array<cplx, 4> v;
    double n2;
    do {
        n2 = 0;
        for (auto& c : v) {
            const double re = rng.normal();
            const double im = rng.normal();
            c = cplx(re, im);
            n2 += std::norm(c);
        }
    } while (n2 < 1e-300);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : v) c *= inv;
    return HaarState(v);
}

HaarState sample_haar_state(std::uint64_t seed, HaarSampler sampler) {
    Rng rng(seed);
    return sample_haar_state(rng, sampler);
}

}  // namespace qwalk

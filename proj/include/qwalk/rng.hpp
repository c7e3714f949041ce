// rng.hpp
// Portable seeded randomness. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the variate transforms below are
// written out so results do not depend on the standard library vendor.

#pragma once

#include <cstdint>
#include <random>

namespace qwalk {

// SplitMix64 finaliser, used to derive independent engine seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for sub-stream `index` of a base seed.
std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    static Rng substream(std::uint64_t base, std::uint64_t index) { return Rng(substream_seed(base, index)); }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random mantissa bits.
    double uniform01();
    // Uniform on (0, 1].
    double uniform_open0() { return 1.0 - uniform01(); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    // Uniform on {0, ..., n-1}, unbiased (rejection sampling).
    std::uint64_t below(std::uint64_t n);
    // Standard normal (Marsaglia polar method).
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0;
    bool has_spare_ = false;
};

}  // namespace qwalk

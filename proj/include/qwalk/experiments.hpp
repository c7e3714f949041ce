// experiments.hpp
// Seeded experiment drivers. Every driver is a pure function of its config:
// it returns in-memory results plus the exact bytes of each output file.

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/coins.hpp"
#include "qwalk/config.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

struct Artifact {
    std::string name;  // file name relative to the output directory
    std::string bytes;
};

using MomentKey = std::pair<int, int>;

// Angles uniform on [-pi, pi), (lambda, gamma) uniform on the unit disc.
NonRepeatingParams random_params(Rng& rng);

// Shift of the six angles that leaves (m1, m2, m3) unchanged: with free
// values (a, b, c) the increments of (alpha, beta, delta, psi, phi, theta)
// are (a, b, b - c, c - a, c - b, c).
NonRepeatingParams shift_preserving_invariants(const NonRepeatingParams& p, double a, double b, double c);

// Exponent pairs with xi + chi even and 2 <= xi + chi <= max_degree.
std::vector<MomentKey> even_moment_keys(int max_degree);

// <r>(t) and sigma(t) for t = 0..t_max.
struct RadialCurve {
    std::vector<double> mean_r;
    std::vector<double> sigma_r;
};

RadialCurve radial_curve(const CoinMatrix& coin, const InitialCoinState& s, int t_max);

// States listed in the config followed by `haar_states` samples drawn from
// sub-streams of the seed.
std::vector<StateSpec> resolve_states(const ExperimentConfig& cfg);

// ---- figure 4 ---------------------------------------------------------------

struct Figure4Curve {
    std::string coin;     // family name
    std::string variant;  // "all", "max" or "min"
    std::string state;    // label of the initial state the curve was computed from
    RadialCurve curve;
};

struct Figure4Spread {
    std::string coin;
    double mean_r = 0;   // max over t of (max - min over states) of <r>
    double sigma_r = 0;  // same for sigma
};

struct Figure4Result {
    std::vector<Figure4Curve> curves;
    std::vector<Figure4Spread> spreads;
    std::vector<Artifact> artifacts;  // figure4.csv, figure4_spread.csv
};

Figure4Result run_figure4(const ExperimentConfig& cfg);

// ---- initial-state independence sweep ----------------------------------------

struct SweepCoin {
    CoinFamily family;
    int index = 0;
    NonRepeatingParams params;
    std::map<MomentKey, double> even_spread;  // max - min over states
    double odd_x_spread = 0;                  // same for <X>
};

struct SweepResult {
    std::vector<SweepCoin> coins;
    std::vector<Artifact> artifacts;  // independence.csv, independence_summary.csv
};

// Families come from cfg.coins (both parametrised families when empty).
// Coin i of family f draws its parameters and then its n_states Haar states
// from one sub-stream of the seed.
SweepResult run_independence_sweep(const ExperimentConfig& cfg);

// ---- five-parameter test ------------------------------------------------------

// matched: shares (m1, m2, m3, lambda, gamma). The controls start from the
// matched partner and shift one invariant by 0.5.
enum class PairKind { matched, shifted_m1, shifted_m3 };

std::string_view to_string(PairKind k);

struct FiveParamPair {
    CoinFamily family;
    int index = 0;
    PairKind kind = PairKind::matched;
    NonRepeatingParams first, second;
    std::map<MomentKey, double> abs_diff;
};

struct FiveParamResult {
    std::vector<FiveParamPair> pairs;
    std::vector<Artifact> artifacts;  // five_param.csv
};

FiveParamResult run_five_param_test(const ExperimentConfig& cfg);

// ---- single-walk experiments --------------------------------------------------

std::vector<Artifact> run_evolve(const ExperimentConfig& cfg);
std::vector<Artifact> run_moments(const ExperimentConfig& cfg);
// heatmap, figure2 and figure3
std::vector<Artifact> run_heatmaps(const ExperimentConfig& cfg);
std::vector<Artifact> run_spectrum(const ExperimentConfig& cfg);
std::vector<Artifact> run_classical(const ExperimentConfig& cfg);

// Dispatches on cfg.experiment.
std::vector<Artifact> run_experiment(const ExperimentConfig& cfg);

// Writes every artifact plus manifest.json (resolved config and FNV-1a
// checksums) into dir. Returns the manifest bytes.
std::string write_artifacts(const std::filesystem::path& dir, const ExperimentConfig& cfg,
                            const std::vector<Artifact>& artifacts);

}  // namespace qwalk

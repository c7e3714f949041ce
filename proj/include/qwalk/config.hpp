// config.hpp
// JSON experiment configuration. A config fully determines every output byte.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qwalk/coins.hpp"
#include "qwalk/haar.hpp"
#include "qwalk/lattice.hpp"

namespace qwalk {

enum class Experiment {
    evolve,
    moments,
    heatmap,
    figure2,
    figure3,
    figure4,
    independence_sweep,
    five_param_test,
    spectrum,
    classical,
};

std::string_view to_string(Experiment e);
Experiment experiment_from_string(std::string_view s);

struct CoinSpec {
    CoinFamily family = CoinFamily::grover4;
    NonRepeatingParams params = NonRepeatingParams::example_c1();

    CoinMatrix build() const;
};

struct StateSpec {
    std::string label;
    InitialCoinState state = InitialCoinState::separable();
};

// Named states: "separable", "grover_ring", "uniform", "basis:x+", "basis:y+",
// "basis:y-", "basis:x-". Anything else throws std::invalid_argument.
StateSpec named_state(std::string_view name);

struct ExperimentConfig {
    Experiment experiment = Experiment::evolve;
    std::uint64_t seed = 1;
    int t = 0;                   // step count (t_max for curve experiments)
    int grid = 0;                // quadrature or scan resolution
    std::vector<CoinSpec> coins;
    std::vector<StateSpec> states;
    int haar_states = 0;         // Haar-sampled states added to `states`
    HaarSampler sampler = HaarSampler::gaussian;
    int n_coins = 0;
    int n_states = 0;
    int pairs = 0;
    int max_degree = 4;
    int enumerate_max = 0;       // classical: enumerate n = 1..enumerate_max
    std::vector<int> msd_steps;  // classical: Monte Carlo walk lengths
    std::uint64_t msd_samples = 0;
    std::string output_dir = "out";
};

// Defaults per experiment; `parse_config` starts from these.
ExperimentConfig default_config(Experiment e);

// Unknown keys and ill-typed values throw std::invalid_argument.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// Canonical JSON echo of a resolved config (used in the run manifest).
nlohmann::json to_json(const ExperimentConfig& c);

nlohmann::json params_to_json(const NonRepeatingParams& p);

}  // namespace qwalk

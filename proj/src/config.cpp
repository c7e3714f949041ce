#include "qwalk/config.hpp"

#include <fstream>
#include <set>

#include "qwalk/momentum.hpp"
#include <stdexcept>

namespace qwalk {

namespace {

using nlohmann::json;

constexpr Experiment kExperiments[] = {
    Experiment::evolve,  Experiment::moments,           Experiment::heatmap,         Experiment::figure2,
    Experiment::figure3, Experiment::figure4,           Experiment::independence_sweep, Experiment::five_param_test,
    Experiment::spectrum, Experiment::classical,
};

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw std::invalid_argument(where + ": expected a JSON object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw std::invalid_argument(where + ": unknown key '" + key + "'");
}

template <class T>
T get_as(const json& j, const std::string& key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument("config key '" + key + "': " + e.what());
    }
}

int get_non_negative(const json& j, const std::string& key) {
    const auto v = get_as<long long>(j, key);
    if (v < 0 || v > 1'000'000'000) throw std::invalid_argument("config key '" + key + "' out of range");
    return static_cast<int>(v);
}

NonRepeatingParams parse_params(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "c1") return NonRepeatingParams::example_c1();
        throw std::invalid_argument("unknown named parameter set '" + j.get<std::string>() + "'");
    }
    reject_unknown(j, {"alpha", "beta", "delta", "psi", "phi", "theta", "lambda", "gamma"}, "coin params");
    NonRepeatingParams p;
    p.alpha = j.value("alpha", 0.0);
    p.beta = j.value("beta", 0.0);
    p.delta = j.value("delta", 0.0);
    p.psi = j.value("psi", 0.0);
    p.phi = j.value("phi", 0.0);
    p.theta = j.value("theta", 0.0);
    p.lambda = j.value("lambda", 0.0);
    p.gamma = j.value("gamma", 0.0);
    if (!p.valid()) throw std::invalid_argument("coin params: lambda^2 + gamma^2 exceeds 1");
    return p;
}

CoinSpec parse_coin(const json& j) {
    if (j.is_string()) return {coin_family_from_string(j.get<std::string>()), NonRepeatingParams::example_c1()};
    reject_unknown(j, {"family", "params"}, "coin");
    CoinSpec c;
    c.family = coin_family_from_string(get_as<std::string>(j, "family"));
    if (j.contains("params")) c.params = parse_params(j.at("params"));
    return c;
}

StateSpec parse_state(const json& j) {
    if (j.is_string()) return named_state(j.get<std::string>());
    reject_unknown(j, {"label", "components"}, "state");
    const auto comps = j.at("components");
    if (!comps.is_array() || comps.size() != 4)
        throw std::invalid_argument("state components: expected 4 [re, im] pairs");
    std::array<cplx, 4> v;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& c = comps[i];
        if (!c.is_array() || c.size() != 2) throw std::invalid_argument("state components: expected [re, im]");
        v[i] = cplx(c[0].get<double>(), c[1].get<double>());
    }
    return {j.value("label", std::string("custom")), InitialCoinState(v)};
}

}  // namespace

std::string_view to_string(Experiment e) {
    switch (e) {
        case Experiment::evolve: return "evolve";
        case Experiment::moments: return "moments";
        case Experiment::heatmap: return "heatmap";
        case Experiment::figure2: return "figure2";
        case Experiment::figure3: return "figure3";
        case Experiment::figure4: return "figure4";
        case Experiment::independence_sweep: return "independence_sweep";
        case Experiment::five_param_test: return "five_param_test";
        case Experiment::spectrum: return "spectrum";
        case Experiment::classical: return "classical";
    }
    return "unknown";
}

Experiment experiment_from_string(std::string_view s) {
    for (auto e : kExperiments)
        if (to_string(e) == s) return e;
    throw std::invalid_argument("unknown experiment '" + std::string(s) + "'");
}

CoinMatrix CoinSpec::build() const {
    switch (family) {
        case CoinFamily::non_repeating: return build_non_repeating(params);
        case CoinFamily::non_reversal: return build_non_reversal(params);
        default: return build_standard(family);
    }
}

StateSpec named_state(std::string_view name) {
    if (name == "separable") return {"separable", InitialCoinState::separable()};
    if (name == "grover_ring") return {"grover_ring", InitialCoinState::grover_ring()};
    if (name == "uniform") return {"uniform", InitialCoinState({0.5, 0.5, 0.5, 0.5})};
    const std::pair<std::string_view, CoinChannel> basis[] = {{"basis:x+", CoinChannel::x_plus},
                                                              {"basis:y+", CoinChannel::y_plus},
                                                              {"basis:y-", CoinChannel::y_minus},
                                                              {"basis:x-", CoinChannel::x_minus}};
    for (const auto& [label, c] : basis)
        if (name == label) return {std::string(label), InitialCoinState::basis(c)};
    throw std::invalid_argument("unknown named state '" + std::string(name) + "'");
}

ExperimentConfig default_config(Experiment e) {
    ExperimentConfig c;
    c.experiment = e;
    const CoinSpec c1_rev{CoinFamily::non_reversal, NonRepeatingParams::example_c1()};
    const CoinSpec c1_rep{CoinFamily::non_repeating, NonRepeatingParams::example_c1()};
    switch (e) {
        case Experiment::evolve:
        case Experiment::moments:
        case Experiment::heatmap:
            c.t = 100;
            c.coins = {{CoinFamily::grover4, {}}};
            c.states = {named_state("grover_ring")};
            break;
        case Experiment::figure2:
            c.t = 100;
            break;
        case Experiment::figure3:
            c.t = 100;
            break;
        case Experiment::figure4:
            c.t = 40;
            c.coins = {{CoinFamily::hadamard4, {}}, {CoinFamily::grover4, {}}, {CoinFamily::dft4, {}}, c1_rep, c1_rev};
            c.states = {named_state("separable"), named_state("grover_ring"), named_state("uniform"),
                        named_state("basis:x+")};
            c.haar_states = 50;
            break;
        case Experiment::independence_sweep:
            c.t = 30;
            c.n_coins = 50;
            c.n_states = 50;
            break;
        case Experiment::five_param_test:
            c.t = 30;
            c.pairs = 20;
            break;
        case Experiment::spectrum:
            c.grid = 64;
            c.coins = {c1_rep};
            break;
        case Experiment::classical:
            c.enumerate_max = 12;
            c.msd_steps = {1, 10, 100};
            c.msd_samples = 100000;
            break;
    }
    if (c.grid == 0) c.grid = kDefaultQuadratureGrid;
    return c;
}

ExperimentConfig parse_config(const json& j) {
    reject_unknown(j,
                   {"experiment", "seed", "t", "grid", "coins", "states", "haar_states", "sampler", "n_coins",
                    "n_states", "pairs", "max_degree", "enumerate_max", "msd_steps", "msd_samples", "output_dir"},
                   "config");
    ExperimentConfig c = default_config(experiment_from_string(get_as<std::string>(j, "experiment")));
    if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j, "seed");
    if (j.contains("t")) c.t = get_non_negative(j, "t");
    if (j.contains("grid")) c.grid = get_non_negative(j, "grid");
    if (j.contains("coins")) {
        c.coins.clear();
        for (const auto& x : j.at("coins")) c.coins.push_back(parse_coin(x));
    }
    if (j.contains("states")) {
        c.states.clear();
        for (const auto& x : j.at("states")) c.states.push_back(parse_state(x));
    }
    if (j.contains("haar_states")) c.haar_states = get_non_negative(j, "haar_states");
    if (j.contains("sampler")) c.sampler = haar_sampler_from_string(get_as<std::string>(j, "sampler"));
    if (j.contains("n_coins")) c.n_coins = get_non_negative(j, "n_coins");
    if (j.contains("n_states")) c.n_states = get_non_negative(j, "n_states");
    if (j.contains("pairs")) c.pairs = get_non_negative(j, "pairs");
    if (j.contains("max_degree")) c.max_degree = get_non_negative(j, "max_degree");
    if (j.contains("enumerate_max")) c.enumerate_max = get_non_negative(j, "enumerate_max");
    if (j.contains("msd_steps")) c.msd_steps = get_as<std::vector<int>>(j, "msd_steps");
    if (j.contains("msd_samples")) c.msd_samples = get_as<std::uint64_t>(j, "msd_samples");
    if (j.contains("output_dir")) c.output_dir = get_as<std::string>(j, "output_dir");
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config " + path + ": " + e.what());
    }
    return parse_config(j);
}

json params_to_json(const NonRepeatingParams& p) {
    return {{"alpha", p.alpha}, {"beta", p.beta}, {"delta", p.delta}, {"psi", p.psi},
            {"phi", p.phi},     {"theta", p.theta}, {"lambda", p.lambda}, {"gamma", p.gamma}};
}

json to_json(const ExperimentConfig& c) {
    json coins = json::array();
    for (const auto& s : c.coins) {
        json cj = {{"family", std::string(to_string(s.family))}};
        if (s.family == CoinFamily::non_repeating || s.family == CoinFamily::non_reversal)
            cj["params"] = params_to_json(s.params);
        coins.push_back(cj);
    }
    json states = json::array();
    for (const auto& s : c.states) {
        json comps = json::array();
        for (const auto& v : s.state.components()) comps.push_back({v.real(), v.imag()});
        states.push_back({{"label", s.label}, {"components", comps}});
    }
    return {{"experiment", std::string(to_string(c.experiment))},
            {"seed", c.seed},
            {"t", c.t},
            {"grid", c.grid},
            {"coins", coins},
            {"states", states},
            {"haar_states", c.haar_states},
            {"sampler", std::string(to_string(c.sampler))},
            {"n_coins", c.n_coins},
            {"n_states", c.n_states},
            {"pairs", c.pairs},
            {"max_degree", c.max_degree},
            {"enumerate_max", c.enumerate_max},
            {"msd_steps", c.msd_steps},
            {"msd_samples", c.msd_samples},
            {"output_dir", c.output_dir}};
}

}  // namespace qwalk

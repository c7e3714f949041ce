// qwalk: command-line driver for the quantum-walk experiments.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qwalk/config.hpp"
#include "qwalk/experiments.hpp"

namespace {

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<int> t;
    std::optional<int> grid;
    std::optional<std::string> out;
    std::optional<std::string> coin;
    std::optional<std::string> state;
    bool full = false;
};

void add_common(CLI::App* sub, Overrides& o) {
    sub->add_option("--config", o.config, "JSON experiment config")->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "base seed");
    sub->add_option("--t", o.t, "number of steps")->check(CLI::NonNegativeNumber);
    sub->add_option("--grid", o.grid, "quadrature / scan grid size")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "output directory");
}

bool accepts(qwalk::Experiment sub, qwalk::Experiment cfg) {
    using qwalk::Experiment;
    if (sub == Experiment::heatmap)
        return cfg == Experiment::heatmap || cfg == Experiment::figure2 || cfg == Experiment::figure3;
    return sub == cfg;
}

qwalk::ExperimentConfig resolve(qwalk::Experiment e, const Overrides& o) {
    qwalk::ExperimentConfig c = o.config.empty() ? qwalk::default_config(e) : qwalk::load_config(o.config);
    if (!accepts(e, c.experiment))
        throw std::invalid_argument("config describes experiment '" + std::string(qwalk::to_string(c.experiment)) +
                                    "', not '" + std::string(qwalk::to_string(e)) + "'");
    if (o.seed) c.seed = *o.seed;
    if (o.t) c.t = *o.t;
    if (o.grid) c.grid = *o.grid;
    if (o.out) c.output_dir = *o.out;
    if (o.coin) c.coins = {{qwalk::coin_family_from_string(*o.coin), qwalk::NonRepeatingParams::example_c1()}};
    if (o.state) c.states = {qwalk::named_state(*o.state)};
    if (o.full) {
        c.n_coins = 500;
        c.n_states = 1000;
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time quantum walks on the square lattice"};
    app.require_subcommand(1);

    using qwalk::Experiment;
    const std::map<std::string, std::pair<Experiment, std::string>> commands = {
        {"evolve", {Experiment::evolve, "evolve one walk and write its probability table"}},
        {"moments", {Experiment::moments, "joint moments and radial statistics of one walk"}},
        {"heatmap", {Experiment::heatmap, "CSV grid and PGM image of a probability field"}},
        {"figure4", {Experiment::figure4, "mean radial distance and spread versus t for all coins"}},
        {"independence", {Experiment::independence_sweep, "initial-state independence sweep of even moments"}},
        {"five-param", {Experiment::five_param_test, "moments of coin pairs sharing (m1, m2, m3, lambda, gamma)"}},
        {"spectrum", {Experiment::spectrum, "eigenphase omega and its gradient over the Brillouin zone"}},
        {"classical", {Experiment::classical, "self-avoiding / non-reversal enumeration and Monte Carlo"}},
    };

    Overrides o;
    std::map<CLI::App*, Experiment> subs;
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.second);
        add_common(sub, o);
        if (entry.first == Experiment::evolve || entry.first == Experiment::moments || entry.first == Experiment::heatmap) {
            sub->add_option("--coin", o.coin, "coin family (parametrised families use the C1 parameters)");
            sub->add_option("--state", o.state, "named initial state");
        }
        if (entry.first == Experiment::independence_sweep)
            sub->add_flag("--full", o.full, "500 coins x 1000 states instead of the desk-scale defaults");
        subs[sub] = entry.first;
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& [sub, experiment] : subs) {
            if (!sub->parsed()) continue;
            const qwalk::ExperimentConfig cfg = resolve(experiment, o);
            const auto artifacts = qwalk::run_experiment(cfg);
            qwalk::write_artifacts(cfg.output_dir, cfg, artifacts);
            for (const auto& a : artifacts) std::cout << cfg.output_dir << "/" << a.name << "\n";
            std::cout << cfg.output_dir << "/manifest.json\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "qwalk: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "qwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qwalk/momentum.hpp"
#include "qwalk/numeric.hpp"
#include "qwalk/output.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

// Sub-stream offsets keep the draws of different experiment parts disjoint.
constexpr std::uint64_t kStateStream = 0x1000'0000ull;
constexpr std::uint64_t kFamilyStream = 0x2000'0000ull;

bool is_parametrised(CoinFamily f) { return f == CoinFamily::non_repeating || f == CoinFamily::non_reversal; }

CoinMatrix build_family(CoinFamily f, const NonRepeatingParams& p) {
    return f == CoinFamily::non_repeating ? build_non_repeating(p) : build_non_reversal(p);
}

std::vector<CoinFamily> sweep_families(const ExperimentConfig& cfg) {
    std::vector<CoinFamily> out;
    for (const auto& c : cfg.coins) {
        if (!is_parametrised(c.family))
            throw std::invalid_argument("sweeps accept only non_repeating and non_reversal coins");
        if (std::find(out.begin(), out.end(), c.family) == out.end()) out.push_back(c.family);
    }
    if (out.empty()) out = {CoinFamily::non_repeating, CoinFamily::non_reversal};
    return out;
}

ProbabilityField evolved_field(const CoinMatrix& coin, const InitialCoinState& s, int t) {
    return probability(evolve(init_walker(s, t), coin, t));
}

std::uint64_t family_stream(CoinFamily f) { return kFamilyStream * (static_cast<std::uint64_t>(f) + 1); }

void require_coins(const ExperimentConfig& cfg) {
    if (cfg.coins.empty()) throw std::invalid_argument(std::string(to_string(cfg.experiment)) + ": no coin configured");
}

void require_states(const std::vector<StateSpec>& states, const ExperimentConfig& cfg) {
    if (states.empty())
        throw std::invalid_argument(std::string(to_string(cfg.experiment)) + ": no initial state configured");
}

std::string heatmap_stem(const CoinSpec& coin, const std::string& state, int t) {
    std::string s = state;
    for (auto& ch : s)
        if (ch == ':' || ch == '+' || ch == '-') ch = ch == '+' ? 'p' : (ch == '-' ? 'm' : '_');
    return "heatmap_" + std::string(to_string(coin.family)) + "_" + s + "_t" + std::to_string(t);
}

std::vector<Artifact> heatmap_artifacts(const CoinSpec& coin, const StateSpec& state, int t) {
    const ProbabilityField p = evolved_field(coin.build(), state.state, t);
    const std::string stem = heatmap_stem(coin, state.label, t);
    return {{stem + ".csv", heatmap_csv(p)}, {stem + ".pgm", heatmap_pgm(p)}};
}

}  // namespace

NonRepeatingParams random_params(Rng& rng) {
    NonRepeatingParams p;
    for (double* a : {&p.alpha, &p.beta, &p.delta, &p.psi, &p.phi, &p.theta}) *a = rng.uniform(-kPi, kPi);
    do {
        p.lambda = rng.uniform(-1, 1);
        p.gamma = rng.uniform(-1, 1);
    } while (p.lambda * p.lambda + p.gamma * p.gamma > 1);
    return p;
}

NonRepeatingParams shift_preserving_invariants(const NonRepeatingParams& p, double a, double b, double c) {
    NonRepeatingParams q = p;
    q.alpha += a;
    q.beta += b;
    q.delta += b - c;
    q.psi += c - a;
    q.phi += c - b;
    q.theta += c;
    return q;
}

std::vector<MomentKey> even_moment_keys(int max_degree) {
    std::vector<MomentKey> keys;
    for (int d = 2; d <= max_degree; d += 2)
        for (int xi = d; xi >= 0; --xi) keys.emplace_back(xi, d - xi);
    return keys;
}

RadialCurve radial_curve(const CoinMatrix& coin, const InitialCoinState& s, int t_max) {
    RadialCurve c;
    c.mean_r.reserve(static_cast<std::size_t>(t_max) + 1);
    c.sigma_r.reserve(static_cast<std::size_t>(t_max) + 1);
    evolve_observed(init_walker(s, t_max), coin, t_max, [&](const WalkerState& w) {
        const ProbabilityField p = probability(w);
        c.mean_r.push_back(mean_radial(p));
        c.sigma_r.push_back(std_radial(p));
    });
    return c;
}

std::vector<StateSpec> resolve_states(const ExperimentConfig& cfg) {
    std::vector<StateSpec> states = cfg.states;
    for (int i = 0; i < cfg.haar_states; ++i) {
        Rng rng = Rng::substream(cfg.seed, kStateStream + static_cast<std::uint64_t>(i));
        states.push_back({"haar_" + std::to_string(i), sample_haar_state(rng, cfg.sampler)});
    }
    return states;
}

Figure4Result run_figure4(const ExperimentConfig& cfg) {
    if (cfg.t < 1) throw std::invalid_argument("figure4: t must be at least 1");
    require_coins(cfg);
    const auto states = resolve_states(cfg);
    require_states(states, cfg);

    const std::size_t ns = states.size();
    std::vector<RadialCurve> cells(cfg.coins.size() * ns);
    parallel_for(cells.size(), [&](std::size_t i) {
        cells[i] = radial_curve(cfg.coins[i / ns].build(), states[i % ns].state, cfg.t);
    });

    Figure4Result r;
    const auto last = static_cast<std::size_t>(cfg.t);
    for (std::size_t c = 0; c < cfg.coins.size(); ++c) {
        const std::string coin(to_string(cfg.coins[c].family));
        const RadialCurve* first = &cells[c * ns];

        Figure4Spread spread{coin};
        for (std::size_t t = 0; t <= last; ++t) {
            double lo_m = std::numeric_limits<double>::infinity(), hi_m = -lo_m, lo_s = lo_m, hi_s = -lo_m;
            for (std::size_t s = 0; s < ns; ++s) {
                lo_m = std::min(lo_m, first[s].mean_r[t]);
                hi_m = std::max(hi_m, first[s].mean_r[t]);
                lo_s = std::min(lo_s, first[s].sigma_r[t]);
                hi_s = std::max(hi_s, first[s].sigma_r[t]);
            }
            spread.mean_r = std::max(spread.mean_r, hi_m - lo_m);
            spread.sigma_r = std::max(spread.sigma_r, hi_s - lo_s);
        }
        r.spreads.push_back(spread);

        const auto family = cfg.coins[c].family;
        if (family == CoinFamily::grover4 || family == CoinFamily::dft4) {
            std::size_t hi = 0, lo = 0;
            for (std::size_t s = 1; s < ns; ++s) {
                if (first[s].mean_r[last] > first[hi].mean_r[last]) hi = s;
                if (first[s].mean_r[last] < first[lo].mean_r[last]) lo = s;
            }
            r.curves.push_back({coin, "max", states[hi].label, first[hi]});
            r.curves.push_back({coin, "min", states[lo].label, first[lo]});
        } else {
            r.curves.push_back({coin, "all", states[0].label, first[0]});
        }
    }

    CsvTable table({"coin", "variant", "t", "mean_r", "sigma_r"});
    for (const auto& c : r.curves)
        for (std::size_t t = 0; t <= last; ++t)
            table.row().add(c.coin).add(c.variant).add(static_cast<int>(t)).add(c.curve.mean_r[t]).add(c.curve.sigma_r[t]);
    CsvTable spread({"coin", "states", "max_spread_mean_r", "max_spread_sigma_r"});
    for (const auto& s : r.spreads) spread.row().add(s.coin).add(static_cast<int>(ns)).add(s.mean_r).add(s.sigma_r);
    r.artifacts = {{"figure4.csv", table.str()}, {"figure4_spread.csv", spread.str()}};
    return r;
}

SweepResult run_independence_sweep(const ExperimentConfig& cfg) {
    if (cfg.n_coins < 1 || cfg.n_states < 2) throw std::invalid_argument("independence: need n_coins >= 1, n_states >= 2");
    const auto families = sweep_families(cfg);
    const auto keys = even_moment_keys(cfg.max_degree);

    SweepResult r;
    for (auto f : families)
        for (int i = 0; i < cfg.n_coins; ++i) r.coins.push_back({f, i, {}, {}, 0});

    parallel_for(r.coins.size(), [&](std::size_t n) {
        SweepCoin& coin = r.coins[n];
        Rng rng = Rng::substream(cfg.seed, family_stream(coin.family) + static_cast<std::uint64_t>(coin.index));
        coin.params = random_params(rng);
        const CoinMatrix m = build_family(coin.family, coin.params);
        std::map<MomentKey, std::pair<double, double>> range;
        std::pair<double, double> odd{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
        for (int s = 0; s < cfg.n_states; ++s) {
            const ProbabilityField p = evolved_field(m, sample_haar_state(rng, cfg.sampler), cfg.t);
            for (const auto& k : keys) {
                const double v = joint_moment(p, k.first, k.second);
                auto [it, fresh] = range.try_emplace(k, v, v);
                it->second.first = std::min(it->second.first, v);
                it->second.second = std::max(it->second.second, v);
            }
            const double x = joint_moment(p, 1, 0);
            odd.first = std::min(odd.first, x);
            odd.second = std::max(odd.second, x);
        }
        for (const auto& [k, lohi] : range) coin.even_spread[k] = lohi.second - lohi.first;
        coin.odd_x_spread = odd.second - odd.first;
    });

    CsvTable table({"family", "coin", "xi", "chi", "parity", "spread"});
    for (const auto& c : r.coins) {
        for (const auto& [k, v] : c.even_spread)
            table.row().add(std::string(to_string(c.family))).add(c.index).add(k.first).add(k.second).add("even").add(v);
        table.row().add(std::string(to_string(c.family))).add(c.index).add(1).add(0).add("odd").add(c.odd_x_spread);
    }
    CsvTable summary({"family", "coins", "states", "t", "max_even_spread", "fraction_odd_spread_above_0.01"});
    for (auto f : families) {
        double worst = 0;
        int coins = 0, odd_hits = 0;
        for (const auto& c : r.coins) {
            if (c.family != f) continue;
            ++coins;
            for (const auto& [k, v] : c.even_spread) worst = std::max(worst, v);
            if (c.odd_x_spread > 0.01) ++odd_hits;
        }
        summary.row()
            .add(std::string(to_string(f)))
            .add(coins)
            .add(cfg.n_states)
            .add(cfg.t)
            .add(worst)
            .add(double(odd_hits) / double(coins));
    }
    r.artifacts = {{"independence.csv", table.str()}, {"independence_summary.csv", summary.str()}};
    return r;
}

std::string_view to_string(PairKind k) {
    switch (k) {
        case PairKind::matched: return "matched";
        case PairKind::shifted_m1: return "shifted_m1";
        case PairKind::shifted_m3: return "shifted_m3";
    }
    return "unknown";
}

FiveParamResult run_five_param_test(const ExperimentConfig& cfg) {
    if (cfg.pairs < 1) throw std::invalid_argument("five-param: need at least one pair");
    const auto families = sweep_families(cfg);
    const auto keys = even_moment_keys(cfg.max_degree);
    Rng state_rng = Rng::substream(cfg.seed, kStateStream);
    const InitialCoinState state = sample_haar_state(state_rng, cfg.sampler);

    FiveParamResult r;
    for (auto f : families)
        for (auto kind : {PairKind::matched, PairKind::shifted_m1, PairKind::shifted_m3})
            for (int i = 0; i < cfg.pairs; ++i) r.pairs.push_back({f, i, kind, {}, {}, {}});

    parallel_for(r.pairs.size(), [&](std::size_t n) {
        FiveParamPair& pair = r.pairs[n];
        // pairs of every kind with the same index share the first coin
        Rng rng = Rng::substream(cfg.seed, family_stream(pair.family) + static_cast<std::uint64_t>(pair.index));
        pair.first = random_params(rng);
        pair.second = shift_preserving_invariants(pair.first, rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi),
                                                  rng.uniform(-kPi, kPi));
        if (pair.kind == PairKind::shifted_m1) {
            pair.second.beta -= 0.25;
            pair.second.psi += 0.25;
        } else if (pair.kind == PairKind::shifted_m3) {
            pair.second.theta -= 0.25;
        }
        const ProbabilityField a = evolved_field(build_family(pair.family, pair.first), state, cfg.t);
        const ProbabilityField b = evolved_field(build_family(pair.family, pair.second), state, cfg.t);
        for (const auto& k : keys)
            pair.abs_diff[k] = std::abs(joint_moment(a, k.first, k.second) - joint_moment(b, k.first, k.second));
    });

    CsvTable table({"family", "pair", "kind", "xi", "chi", "abs_diff", "m1", "m2", "m3", "lambda", "gamma"});
    for (const auto& p : r.pairs) {
        const DerivedInvariants m = derived_invariants(p.second);
        for (const auto& [k, v] : p.abs_diff)
            table.row()
                .add(std::string(to_string(p.family)))
                .add(p.index)
                .add(std::string(to_string(p.kind)))
                .add(k.first)
                .add(k.second)
                .add(v)
                .add(m.m1)
                .add(m.m2)
                .add(m.m3)
                .add(p.second.lambda)
                .add(p.second.gamma);
    }
    r.artifacts = {{"five_param.csv", table.str()}};
    return r;
}

std::vector<Artifact> run_evolve(const ExperimentConfig& cfg) {
    require_coins(cfg);
    require_states(cfg.states, cfg);
    const ProbabilityField p = evolved_field(cfg.coins[0].build(), cfg.states[0].state, cfg.t);
    CsvTable table({"x", "y", "p"});
    for (int x = -p.extent(); x <= p.extent(); ++x)
        for (int y = -p.extent(); y <= p.extent(); ++y)
            if (p.at(x, y) > 0) table.row().add(x).add(y).add(p.at(x, y));
    return {{"evolve.csv", table.str()}};
}

std::vector<Artifact> run_moments(const ExperimentConfig& cfg) {
    require_coins(cfg);
    require_states(cfg.states, cfg);
    const CoinSpec& coin = cfg.coins[0];
    const RadialCurve curve = radial_curve(coin.build(), cfg.states[0].state, cfg.t);
    const ProbabilityField p = evolved_field(coin.build(), cfg.states[0].state, cfg.t);
    const MomentReport report = moment_report(p, cfg.max_degree);

    CsvTable moments({"t", "xi", "chi", "method", "value"});
    for (const auto& [k, v] : report.joint) moments.row().add(cfg.t).add(k.first).add(k.second).add("direct").add(v);
    if (coin.family == CoinFamily::non_repeating) {
        for (const auto& k : even_moment_keys(cfg.max_degree)) {
            const double c = asymptotic_even_moment(coin.params, k.first, k.second, cfg.grid);
            moments.row().add(cfg.t).add(k.first).add(k.second).add("asymptotic").add(c * ipow(cfg.t, k.first + k.second));
        }
    }
    CsvTable radial({"t", "mean_r", "sigma_r"});
    for (std::size_t t = 0; t < curve.mean_r.size(); ++t)
        radial.row().add(static_cast<int>(t)).add(curve.mean_r[t]).add(curve.sigma_r[t]);
    return {{"moments.csv", moments.str()}, {"radial.csv", radial.str()}};
}

std::vector<Artifact> run_heatmaps(const ExperimentConfig& cfg) {
    std::vector<std::pair<CoinSpec, StateSpec>> panels;
    const NonRepeatingParams c1 = NonRepeatingParams::example_c1();
    switch (cfg.experiment) {
        case Experiment::figure2:
            panels = {{{CoinFamily::hadamard4, c1}, named_state("separable")},
                      {{CoinFamily::dft4, c1}, named_state("separable")},
                      {{CoinFamily::grover4, c1}, named_state("grover_ring")}};
            break;
        case Experiment::figure3:
            panels = {{{CoinFamily::non_reversal, c1}, named_state("separable")},
                      {{CoinFamily::non_repeating, c1}, named_state("grover_ring")}};
            break;
        default:
            require_coins(cfg);
            require_states(cfg.states, cfg);
            panels = {{cfg.coins[0], cfg.states[0]}};
    }
    std::vector<std::vector<Artifact>> parts(panels.size());
    parallel_for(panels.size(), [&](std::size_t i) { parts[i] = heatmap_artifacts(panels[i].first, panels[i].second, cfg.t); });
    std::vector<Artifact> out;
    for (auto& p : parts)
        for (auto& a : p) out.push_back(std::move(a));
    return out;
}

std::vector<Artifact> run_spectrum(const ExperimentConfig& cfg) {
    require_coins(cfg);
    if (cfg.grid < 1) throw std::invalid_argument("spectrum: grid must be positive");
    const NonRepeatingParams& p = cfg.coins[0].params;
    CsvTable table({"kx", "ky", "b", "omega", "domega_dkx", "domega_dky"});
    for (int i = 0; i < cfg.grid; ++i)
        for (int j = 0; j < cfg.grid; ++j) {
            const MomentumPoint k = quadrature_node(i, j, cfg.grid);
            const EigenPhase w = omega(p, k);
            const OmegaGradient g = grad_omega(p, k);
            table.row().add(k.kx).add(k.ky).add(w.b).add(w.omega).add(g.dkx).add(g.dky);
        }
    return {{"spectrum.csv", table.str()}};
}

std::vector<Artifact> run_classical(const ExperimentConfig& cfg) {
    CsvTable table({"n", "kind", "exact_count", "msd", "std_error", "samples", "seed"});
    for (int n = 1; n <= cfg.enumerate_max; ++n)
        for (auto kind : {PathKind::self_avoiding, PathKind::non_reversal})
            table.row()
                .add(n)
                .add(std::string(to_string(kind)))
                .add(enumerate(kind, n))
                .add(exact_mean_sq_displacement(kind, n))
                .add("0")
                .add("")
                .add("");
    for (int n : cfg.msd_steps) {
        const WalkEnsembleStats s = msd_estimate(n, cfg.msd_samples, cfg.seed);
        table.row()
            .add(n)
            .add("non_reversal_monte_carlo")
            .add("")
            .add(s.mean_sq_displacement)
            .add(s.std_error)
            .add(s.samples)
            .add(s.seed);
    }
    return {{"classical.csv", table.str()}};
}

std::vector<Artifact> run_experiment(const ExperimentConfig& cfg) {
    switch (cfg.experiment) {
        case Experiment::evolve: return run_evolve(cfg);
        case Experiment::moments: return run_moments(cfg);
        case Experiment::heatmap:
        case Experiment::figure2:
        case Experiment::figure3: return run_heatmaps(cfg);
        case Experiment::figure4: return run_figure4(cfg).artifacts;
        case Experiment::independence_sweep: return run_independence_sweep(cfg).artifacts;
        case Experiment::five_param_test: return run_five_param_test(cfg).artifacts;
        case Experiment::spectrum: return run_spectrum(cfg);
        case Experiment::classical: return run_classical(cfg);
    }
    throw std::logic_error("run_experiment: unhandled experiment");
}

std::string write_artifacts(const std::filesystem::path& dir, const ExperimentConfig& cfg,
                            const std::vector<Artifact>& artifacts) {
    nlohmann::json outputs = nlohmann::json::array();
    for (const auto& a : artifacts) {
        write_file(dir / a.name, a.bytes);
        outputs.push_back({{"file", a.name}, {"bytes", a.bytes.size()}, {"fnv1a64", fnv1a_hex(a.bytes)}});
    }
    nlohmann::json manifest = {{"config", to_json(cfg)}, {"outputs", outputs}};
    const std::string bytes = manifest.dump(2) + "\n";
    write_file(dir / "manifest.json", bytes);
    return bytes;
}

}  // namespace qwalk

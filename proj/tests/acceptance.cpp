// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/haar.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/output.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { notes.push_back("     " + what); }
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= budget_s, fmt("runtime %.1f s within %.0f s", secs, budget_s));
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title, secs);
    for (const auto& n : o.notes) std::printf("         %s\n", n.c_str());
    std::fflush(stdout);
}

std::vector<NonRepeatingParams> seeded_params(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<NonRepeatingParams> out;
    for (int i = 0; i < n; ++i) out.push_back(random_params(rng));
    return out;
}

MomentumPoint random_k(Rng& rng) { return {rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi)}; }

std::array<cplx, 4> eigenvalues(const Mat4& m) {
    Eigen::Matrix4cd e;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) e(r, c) = m(r, c);
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(e, false);
    std::array<cplx, 4> out;
    for (int i = 0; i < 4; ++i) out[std::size_t(i)] = es.eigenvalues()(i);
    return out;
}

// Best matching distance between two 4-element multisets.
double set_distance(const std::array<cplx, 4>& a, std::array<cplx, 4> b) {
    std::sort(b.begin(), b.end(), [](cplx x, cplx y) { return std::arg(x) < std::arg(y); });
    double best = 1e300;
    do {
        double worst = 0;
        for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
        best = std::min(best, worst);
    } while (std::next_permutation(b.begin(), b.end(), [](cplx x, cplx y) { return std::arg(x) < std::arg(y); }));
    return best;
}

double quartic_diff(const Quartic& a, const Quartic& b) {
    double d = 0;
    for (std::size_t i = 0; i < 5; ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

ProbabilityField walk(const CoinMatrix& coin, const InitialCoinState& s, int t) {
    return probability(evolve(init_walker(s, t), coin, t));
}

// Least-squares fit of v(t) = a t over t in [lo, hi]; returns a.
double ratio_fit(const std::vector<double>& v, int lo, int hi) {
    double num = 0, den = 0;
    for (int t = lo; t <= hi; ++t) {
        num += t * v[std::size_t(t)];
        den += double(t) * t;
    }
    return num / den;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

int main() {
    criterion(1, "unitarity and probability conservation", 60, [](Outcome& o) {
        std::vector<std::pair<std::string, CoinMatrix>> coins = {
            {"hadamard4", build_standard(CoinFamily::hadamard4)},
            {"grover4", build_standard(CoinFamily::grover4)},
            {"dft4", build_standard(CoinFamily::dft4)},
            {"non_repeating(C1)", build_non_repeating(NonRepeatingParams::example_c1())},
            {"non_reversal(C1)", build_non_reversal(NonRepeatingParams::example_c1())}};
        double worst_param = 0;
        for (const auto& p : seeded_params(1000, 101)) {
            worst_param = std::max(worst_param, check_unitary(build_non_repeating(p)));
            worst_param = std::max(worst_param, check_unitary(build_non_reversal(p)));
        }
        o.require(worst_param <= 1e-12, fmt("1000 random parametrised coins: max |C^dag C - I| = %.2e", worst_param));
        Rng rng(102);
        for (const auto& [name, coin] : coins) {
            const double u = check_unitary(coin);
            double drift = 0;
            for (int s = 0; s < 5; ++s)
                drift = std::max(drift, std::abs(walk(coin, sample_haar_state(rng), 100).total() - 1));
            o.require(u <= 1e-12 && drift <= 1e-10,
                      fmt("%s: unitarity %.2e, max |sum p - 1| over 5 states at t=100 = %.2e", name.c_str(), u, drift));
        }
    });

    criterion(2, "support square and non-reversal origin zeros", 60, [](Outcome& o) {
        Rng rng(201);
        auto params = seeded_params(20, 202);
        params.push_back(NonRepeatingParams::example_c1());
        double outside = 0;
        for (const auto& p : params) {
            const WalkerState w = evolve(init_walker(sample_haar_state(rng), 20), build_non_repeating(p), 20);
            const int bound = (20 + 1) / 2;
            for (int x = -20; x <= 20; ++x)
                for (int y = -20; y <= 20; ++y)
                    if (std::max(std::abs(x), std::abs(y)) > bound)
                        for (auto c : kChannels) outside = std::max(outside, std::norm(w.amplitude(x, y, c)));
        }
        o.require(outside <= 1e-14, fmt("non-repeating, 21 coins, t=20: max p outside |x|,|y| <= 10 is %.2e", outside));
        double origin = 0;
        for (const auto& p : params)
            for (auto c : kChannels)
                origin = std::max(origin, walk(build_non_reversal(p), InitialCoinState::basis(c), 2).at(0, 0));
        o.require(origin <= 1e-14, fmt("non-reversal, 21 coins x 4 basis states, t=2: max p(0,0) = %.2e", origin));
    });

    criterion(3, "even moments independent of the initial coin state", 600, [](Outcome& o) {
        ExperimentConfig cfg = default_config(Experiment::independence_sweep);
        cfg.t = 30;
        cfg.n_coins = 50;
        cfg.n_states = 20;
        cfg.max_degree = 4;
        const SweepResult r = run_independence_sweep(cfg);
        for (auto f : {CoinFamily::non_repeating, CoinFamily::non_reversal}) {
            double worst = 0;
            int within = 0, odd = 0, n = 0;
            MomentKey worst_key{0, 0};
            for (const auto& c : r.coins) {
                if (c.family != f) continue;
                ++n;
                double coin_worst = 0;
                for (const auto& [k, v] : c.even_spread) {
                    coin_worst = std::max(coin_worst, v);
                    if (v > worst) worst = v, worst_key = k;
                }
                if (coin_worst <= 1e-9) ++within;
                if (c.odd_x_spread > 1e-2) ++odd;
            }
            const std::string fam(to_string(f));
            o.require(worst <= 1e-9, fmt("%s: %d/%d coins with every even spread <= 1e-9; worst spread %.3g at <X^%d Y^%d>",
                                         fam.c_str(), within, n, worst, worst_key.first, worst_key.second));
            o.require(odd >= (9 * n + 9) / 10, fmt("%s: <X> spread > 1e-2 for %d/%d coins", fam.c_str(), odd, n));
        }
    });

    criterion(4, "moments fixed by (m1, m2, m3, lambda, gamma)", 300, [](Outcome& o) {
        ExperimentConfig cfg = default_config(Experiment::five_param_test);
        cfg.t = 30;
        cfg.pairs = 20;
        cfg.max_degree = 4;
        const FiveParamResult r = run_five_param_test(cfg);
        for (auto f : {CoinFamily::non_repeating, CoinFamily::non_reversal}) {
            const std::string fam(to_string(f));
            double matched = 0, m1_min = 1e300, m3_min = 1e300;
            for (const auto& p : r.pairs) {
                if (p.family != f) continue;
                if (p.kind == PairKind::matched)
                    for (const auto& [k, v] : p.abs_diff) matched = std::max(matched, v);
                else if (p.kind == PairKind::shifted_m1)
                    m1_min = std::min(m1_min, p.abs_diff.at({2, 0}));
                else
                    m3_min = std::min(m3_min, p.abs_diff.at({2, 0}));
            }
            o.require(matched <= 1e-9, fmt("%s: 20 matched pairs, max even-moment difference %.3g", fam.c_str(), matched));
            o.require(m1_min >= 1e-4, fmt("%s: 20 pairs with m1 shifted by 0.5, min |d<X^2>| %.3g", fam.c_str(), m1_min));
            o.note(fmt("%s: diagnostic, 20 pairs with m3 shifted by 0.5, min |d<X^2>| %.3g", fam.c_str(), m3_min));
        }
    });

    criterion(5, "non-repeating closed-form spectrum", 60, [](Outcome& o) {
        Rng rng(501);
        double poly = 0, eig = 0;
        for (const auto& p : seeded_params(1000, 502)) {
            const MomentumPoint k = random_k(rng);
            const Mat4 u = u_momentum(build_non_repeating(p), k);
            poly = std::max(poly, quartic_diff(characteristic_polynomial(u), char_quartic_nonrepeating(p, k).coefficients()));
            eig = std::max(eig, set_distance(omega(p, k).eigenvalues(), eigenvalues(u)));
        }
        o.require(poly <= 1e-10, fmt("1000 draws: max coefficient difference %.2e", poly));
        o.require(eig <= 1e-10, fmt("1000 draws: max eigenvalue distance to {+-e^(+-i omega)} %.2e", eig));
    });

    criterion(6, "non-reversal closed-form quartic", 60, [](Outcome& o) {
        Rng rng(601);
        double poly = 0;
        for (const auto& p : seeded_params(1000, 602)) {
            const MomentumPoint k = random_k(rng);
            poly = std::max(poly, quartic_diff(characteristic_polynomial(u_momentum(build_non_reversal(p), k)),
                                               char_quartic_nonreversal(p, k).coefficients()));
        }
        o.require(poly <= 1e-10, fmt("1000 draws: max coefficient difference %.2e", poly));
        double conj = 0;
        for (auto p : seeded_params(200, 603)) {
            p.psi = 2 * p.theta - p.alpha - p.phi - p.beta;  // b2 = -b1
            conj = std::max(conj, conjugation_defect(eigenvalues(u_momentum(build_non_reversal(p), random_k(rng)))));
        }
        o.require(conj <= 1e-10, fmt("200 draws with b1 = -b2: max conjugate-pair defect %.2e", conj));
        int broken = 0;
        double largest = 0;
        for (const auto& p : seeded_params(200, 604)) {
            const double d = negation_defect(eigenvalues(u_momentum(build_non_reversal(p), random_k(rng))));
            largest = std::max(largest, d);
            if (d >= 1e-3) ++broken;
        }
        o.require(broken > 0, fmt("200 generic draws: %d break p -> -p by >= 1e-3 (largest %.3f)", broken, largest));
    });

    criterion(7, "asymptotic second moment against direct evolution", 900, [](Outcome& o) {
        Rng rng(701);
        const InitialCoinState s = sample_haar_state(rng);
        for (const auto& p : seeded_params(5, 702)) {
            const CoinMatrix coin = build_non_repeating(p);
            const double c = asymptotic_even_moment(p, 2, 0, kDefaultQuadratureGrid);
            double m80 = 0, m100 = 0;
            evolve_observed(init_walker(s, 100), coin, 100, [&](const WalkerState& w) {
                if (w.t() == 80) m80 = joint_moment(probability(w), 2, 0);
                if (w.t() == 100) m100 = joint_moment(probability(w), 2, 0);
            });
            // <X^2>/t = c t + d, slope through t = 80 and t = 100
            const double fit = (m100 / 100 - m80 / 80) / 20;
            const double rel = std::abs(fit - c) / c;
            o.require(rel <= 0.05, fmt("quadrature c = %.6f, fitted %.6f, relative difference %.2f%%", c, fit, 100 * rel));
        }
    });

    criterion(8, "analytic group velocity", 60, [](Outcome& o) {
        Rng rng(801);
        const double h = 1e-6;
        int nodes = 0;
        double worst = 0;
        Rng param_rng(802);
        while (nodes < 1000) {
            const NonRepeatingParams p = random_params(param_rng);
            const MomentumPoint k = random_k(rng);
            if (std::abs(band_parameter(p, k)) > 0.99) continue;  // interior nodes only
            const OmegaGradient g = grad_omega(p, k);
            const double fx = (omega(p, {k.kx + h, k.ky}).omega - omega(p, {k.kx - h, k.ky}).omega) / (2 * h);
            const double fy = (omega(p, {k.kx, k.ky + h}).omega - omega(p, {k.kx, k.ky - h}).omega) / (2 * h);
            const double rel = std::hypot(g.dkx - fx, g.dky - fy) / std::max(std::hypot(fx, fy), 1e-3);
            worst = std::max(worst, rel);
            ++nodes;
        }
        o.require(worst <= 1e-6, fmt("%d interior nodes: max relative deviation %.2e", nodes, worst));
    });

    criterion(9, "radial growth curves", 600, [](Outcome& o) {
        ExperimentConfig cfg = default_config(Experiment::figure4);
        cfg.t = 40;
        const Figure4Result r = run_figure4(cfg);
        for (const auto& c : r.curves) {
            bool stable = true;
            std::string detail;
            for (const auto* v : {&c.curve.mean_r, &c.curve.sigma_r}) {
                const double s1 = ratio_fit(*v, 30, 35), s2 = ratio_fit(*v, 35, 40);
                const double rel = std::abs(s1 - s2) / std::abs(s2);
                stable = stable && rel <= 0.02;
                detail += fmt(" %s/t %.4f -> %.4f (%.2f%%)", v == &c.curve.mean_r ? "<r>" : "sigma", s1, s2, 100 * rel);
            }
            o.require(stable, c.coin + "/" + c.variant + " [" + c.state + "] fit over [30,35] vs [35,40]:" + detail);
        }
        double rep = 0, rev = 0, gmax = 0, gmin = 0;
        const RadialCurve *hi = nullptr, *lo = nullptr;
        for (const auto& c : r.curves) {
            if (c.coin == "grover4") (c.variant == "max" ? hi : lo) = &c.curve;
            const double v = c.curve.mean_r[40];
            if (c.coin == "non_repeating") rep = v;
            if (c.coin == "non_reversal") rev = v;
            if (c.coin == "grover4" && c.variant == "max") gmax = v;
            if (c.coin == "grover4" && c.variant == "min") gmin = v;
        }
        o.require(rev > rep, fmt("C1: non-reversal <r>(40) = %.4f > non-repeating %.4f", rev, rep));
        bool ordered = hi && lo;
        for (int t = 0; ordered && t <= 40; ++t) ordered = hi->mean_r[std::size_t(t)] >= lo->mean_r[std::size_t(t)];
        o.require(ordered && gmax > gmin,
                  fmt("Grover: max-variant <r> >= min-variant for all t, at t=40 %.4f > %.4f", gmax, gmin));
        for (const auto& s : r.spreads)
            if (s.coin == "non_repeating" || s.coin == "non_reversal" || s.coin == "hadamard4")
                o.require(s.mean_r <= 1e-9 && s.sigma_r <= 1e-9,
                          fmt("%s: spread over %zu states, <r> %.2e, sigma %.2e", s.coin.c_str(),
                              resolve_states(cfg).size(), s.mean_r, s.sigma_r));
    });

    criterion(10, "classical baselines", 300, [](Outcome& o) {
        const WalkEnsembleStats s = msd_estimate(100, 100000, 1001);
        const double ratio = s.mean_sq_displacement / 100;
        o.require(ratio >= 1.9 && ratio <= 2.1,
                  fmt("non-reversal n=100, 1e5 samples: <r^2>/n = %.4f +- %.4f", ratio, s.std_error / 100));
        const auto c1 = enumerate(PathKind::self_avoiding, 1), c2 = enumerate(PathKind::self_avoiding, 2);
        o.require(c1 == 4 && c2 == 12, fmt("c1 = %llu, c2 = %llu", (unsigned long long)c1, (unsigned long long)c2));
        bool subset = true;
        std::vector<std::uint64_t> saw(15);
        for (int n = 0; n <= 14; ++n) {
            saw[std::size_t(n)] = enumerate(PathKind::self_avoiding, n);
            subset = subset && saw[std::size_t(n)] <= enumerate(PathKind::non_reversal, n);
        }
        o.require(subset, "self-avoiding count <= non-reversal count for n <= 14");
        const double growth = double(saw[14]) / double(saw[13]);
        o.require(growth >= 2.5 && growth <= 2.75,
                  fmt("c14 / c13 = %llu / %llu = %.4f", (unsigned long long)saw[14], (unsigned long long)saw[13], growth));
    });

    criterion(11, "Hadamard rotated fourth moment", 300, [](Outcome& o) {
        Rng rng(1101);
        const CoinMatrix h = build_standard(CoinFamily::hadamard4);
        double lo = 1e300, hi = -1e300, sum = 0;
        for (int i = 0; i < 20; ++i) {
            const double v = rotated_joint_moment(walk(h, sample_haar_state(rng), 100), 2, 2);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
        const double rel = (hi - lo) / (sum / 20);
        o.require(rel <= 0.02, fmt("t=100, 20 states: <(X+Y)^2 (X-Y)^2> in [%.6g, %.6g], relative spread %.3f%%", lo, hi,
                                   100 * rel));
    });

    criterion(12, "byte-identical reruns", 1e9, [](Outcome& o) {
        const auto root = std::filesystem::temp_directory_path() / "qwalk_acceptance";
        std::filesystem::remove_all(root);
        for (auto e : {Experiment::evolve, Experiment::moments, Experiment::heatmap, Experiment::figure2,
                       Experiment::figure3, Experiment::figure4, Experiment::independence_sweep,
                       Experiment::five_param_test, Experiment::spectrum, Experiment::classical}) {
            ExperimentConfig cfg = default_config(e);
            if (e == Experiment::moments) cfg.coins = {CoinSpec{CoinFamily::non_repeating}};
            const std::string name(to_string(e));
            const auto a = root / (name + "_a"), b = root / (name + "_b");
            write_artifacts(a, cfg, run_experiment(cfg));
            write_artifacts(b, cfg, run_experiment(cfg));
            std::size_t files = 0, same = 0;
            for (const auto& entry : std::filesystem::directory_iterator(a)) {
                ++files;
                if (slurp(entry.path()) == slurp(b / entry.path().filename())) ++same;
            }
            o.require(files > 1 && same == files, fmt("%s: %zu/%zu files identical", name.c_str(), same, files));
        }
        std::filesystem::remove_all(root);
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

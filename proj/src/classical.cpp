#include "qwalk/classical.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qwalk/parallel.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

constexpr std::uint64_t kSamplesPerStream = 1024;

Site advance(Site s, CoinChannel c) {
    const auto d = displacement(c);
    return {s.x + d[0], s.y + d[1]};
}

LatticePath draw_non_reversal(int n, Rng& rng) {
    LatticePath path;
    path.steps.reserve(static_cast<std::size_t>(n));
    auto prev = static_cast<CoinChannel>(rng.below(4));
    path.steps.push_back(prev);
    for (int i = 1; i < n; ++i) {
        // the three channels other than inverse(prev), in index order
        int pick = static_cast<int>(rng.below(3));
        if (pick >= index_of(inverse(prev))) ++pick;
        prev = static_cast<CoinChannel>(pick);
        path.steps.push_back(prev);
    }
    return path;
}

struct Tally {
    std::uint64_t count = 0;
    std::uint64_t sum_r2 = 0;
};

class Enumerator {
public:
    Enumerator(PathKind kind, int n) : kind_(kind), n_(n), side_(2 * n + 1), visited_(side_ * side_, 0) {}

    Tally run_from(CoinChannel first) {
        tally_ = {};
        mark({0, 0}, 1);
        const Site s = advance({0, 0}, first);
        mark(s, 1);
        dfs(s, first, 1);
        mark(s, 0);
        mark({0, 0}, 0);
        return tally_;
    }

private:
    void mark(Site s, char v) { visited_[idx(s)] = v; }
    std::size_t idx(Site s) const {
        return static_cast<std::size_t>(s.x + n_) * static_cast<std::size_t>(side_) + static_cast<std::size_t>(s.y + n_);
    }

    void dfs(Site at, CoinChannel last, int depth) {
        if (depth == n_) {
            ++tally_.count;
            tally_.sum_r2 += static_cast<std::uint64_t>(at.x * at.x + at.y * at.y);
            return;
        }
        for (auto c : kChannels) {
            if (c == inverse(last)) continue;
            const Site next = advance(at, c);
            if (kind_ == PathKind::self_avoiding) {
                if (visited_[idx(next)]) continue;
                mark(next, 1);
                dfs(next, c, depth + 1);
                mark(next, 0);
            } else {
                dfs(next, c, depth + 1);
            }
        }
    }

    PathKind kind_;
    int n_;
    int side_;
    std::vector<char> visited_;
    Tally tally_;
};

Tally enumerate_tally(PathKind kind, int n) {
    if (n < 0 || n > kMaxEnumerationSteps)
        throw std::invalid_argument("enumerate: n = " + std::to_string(n) + " outside supported range 0.." +
                                    std::to_string(kMaxEnumerationSteps));
    if (n == 0) return {1, 0};
    std::array<Tally, 4> branch;
    parallel_for(4, [&](std::size_t i) {
        Enumerator e(kind, n);
        branch[i] = e.run_from(kChannels[i]);
    });
    Tally t;
    for (const auto& b : branch) {
        t.count += b.count;
        t.sum_r2 += b.sum_r2;
    }
    return t;
}

}  // namespace

std::vector<Site> LatticePath::visited() const {
    std::vector<Site> sites{{0, 0}};
    sites.reserve(steps.size() + 1);
    for (auto c : steps) sites.push_back(advance(sites.back(), c));
    return sites;
}

Site LatticePath::endpoint() const {
    Site s;
    for (auto c : steps) s = advance(s, c);
    return s;
}

bool LatticePath::is_non_reversal() const {
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (steps[i] == inverse(steps[i - 1])) return false;
    return true;
}

bool LatticePath::is_self_avoiding() const {
    const auto sites = visited();
    for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = i + 1; j < sites.size(); ++j)
            if (sites[i] == sites[j]) return false;
    return true;
}

std::string_view to_string(PathKind k) { return k == PathKind::self_avoiding ? "self_avoiding" : "non_reversal"; }

PathKind path_kind_from_string(std::string_view s) {
    if (s == "self_avoiding") return PathKind::self_avoiding;
    if (s == "non_reversal") return PathKind::non_reversal;
    throw std::invalid_argument("unknown path kind '" + std::string(s) + "'");
}

LatticePath sample_non_reversal(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_non_reversal: n must be at least 1");
    Rng rng(seed);
    return draw_non_reversal(n, rng);
}

WalkEnsembleStats msd_estimate(int n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("msd_estimate: n must be at least 1");
    if (samples < 100) throw std::invalid_argument("msd_estimate: need at least 100 samples");
    const std::uint64_t streams = (samples + kSamplesPerStream - 1) / kSamplesPerStream;
    std::vector<Tally> r2(streams);
    std::vector<double> r4(streams);
    parallel_for(streams, [&](std::size_t s) {
        Rng rng = Rng::substream(seed, s);
        const std::uint64_t begin = s * kSamplesPerStream;
        const std::uint64_t end = std::min(samples, begin + kSamplesPerStream);
        Tally t;
        double q = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const Site e = draw_non_reversal(n, rng).endpoint();
            const auto d2 = static_cast<std::uint64_t>(e.x * e.x + e.y * e.y);
            ++t.count;
            t.sum_r2 += d2;
            q += double(d2) * double(d2);
        }
        r2[s] = t;
        r4[s] = q;
    });
    std::uint64_t sum = 0;
    double sum_sq = 0;
    for (std::size_t s = 0; s < streams; ++s) {
        sum += r2[s].sum_r2;
        sum_sq += r4[s];
    }
    const double m = double(sum) / double(samples);
    const double var = (sum_sq - double(samples) * m * m) / double(samples - 1);
    WalkEnsembleStats st;
    st.n = n;
    st.samples = samples;
    st.mean_sq_displacement = m;
    st.std_error = std::sqrt(std::max(var, 0.0) / double(samples));
    st.seed = seed;
    return st;
}

std::uint64_t enumerate(PathKind kind, int n) { return enumerate_tally(kind, n).count; }

double exact_mean_sq_displacement(PathKind kind, int n) {
    const Tally t = enumerate_tally(kind, n);
    return double(t.sum_r2) / double(t.count);
}

}  // namespace qwalk

#include "epidemetric/randomwalk.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "epidemetric/variational.hpp"

namespace epidemetric {

namespace {

uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SplitMix64::SplitMix64(uint64_t seed, uint64_t stream) : state_(mix64(seed) ^ mix64(stream * 0xda942042e4dd58b5ULL + 1)) {}

uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::nextDouble() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

TransitionStructure::TransitionStructure(const Graph& g) : g_(&g) {
    int n = g.numVertices();
    local_.resize(n);
    cumulative_.resize(n);
    for (int x = 0; x < n; ++x) {
        double acc = 0.0;
        cumulative_[x].reserve(g.neighbors(x).size());
        for (auto [y, e] : g.neighbors(x)) {
            acc += g.edge(e).weight;
            cumulative_[x].push_back(acc);
        }
        local_[x] = acc;
    }
}

double TransitionStructure::probability(int x, int y) const {
    int e = g_->edgeId(x, y);
    return e < 0 ? 0.0 : g_->edge(e).weight / local_[x];
}

int TransitionStructure::step(int x, double u) const {
    const auto& cum = cumulative_[x];
    double target = u * local_[x];
    auto it = std::upper_bound(cum.begin(), cum.end(), target);
    size_t idx = std::min(static_cast<size_t>(it - cum.begin()), cum.size() - 1);
    return g_->neighbors(x)[idx].first;
}

std::vector<double> stationary(const Graph& g) {
    int n = g.numVertices();
    std::vector<double> pi(n);
    double z = 0.0;
    for (int x = 0; x < n; ++x) {
        pi[x] = g.degree(x);
        z += pi[x];
    }
    for (double& p : pi) p /= z;
    return pi;
}

namespace {

long defaultMaxSteps(const Graph& g, const WalkConfig& cfg) {
    if (cfg.max_steps > 0) return cfg.max_steps;
    long n = g.numVertices();
    return 100 * n * n;
}

void checkConfig(const WalkConfig& cfg) {
    if (cfg.trials < 1) throw GraphError("trials must be >= 1");
}

void checkAborts(long aborted, long trials) {
    if (aborted * 100 > trials)
        throw GraphError("more than 1% of trials exceeded max_steps (" + std::to_string(aborted) + "/" +
                         std::to_string(trials) + "); increase max_steps");
}

}  // namespace

McEstimate escapeProbabilityMc(const Graph& g, int a, int b, const WalkConfig& cfg) {
    if (a == b) throw GraphError("escape probability requires distinct endpoints");
    checkConfig(cfg);
    TransitionStructure t(g);
    long max_steps = defaultMaxSteps(g, cfg);
    long successes = 0, aborted = 0;
    for (long trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng(cfg.seed, static_cast<uint64_t>(trial));
        int x = a;
        long steps = 0;
        while (true) {
            if (steps++ >= max_steps) {
                ++aborted;
                break;
            }
            x = t.step(x, rng.nextDouble());
            if (x == b) {
                ++successes;
                break;
            }
            if (x == a) break;
        }
    }
    checkAborts(aborted, cfg.trials);
    long counted = cfg.trials - aborted;
    double p = static_cast<double>(successes) / counted;
    double se = std::sqrt(p * (1.0 - p) / counted);
    return {p, se, counted, aborted};
}

McEstimate greenFunctionMc(const Graph& g, int a, int b, const WalkConfig& cfg) {
    if (a == b) throw GraphError("Green's function requires distinct endpoints");
    checkConfig(cfg);
    TransitionStructure t(g);
    long max_steps = defaultMaxSteps(g, cfg);
    long aborted = 0;
    double sum = 0.0, sumsq = 0.0;
    for (long trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng(cfg.seed, static_cast<uint64_t>(trial));
        int x = a;
        long visits = 1;  // t = 0 counts as a visit
        long steps = 0;
        bool ok = true;
        while (true) {
            if (steps++ >= max_steps) {
                ++aborted;
                ok = false;
                break;
            }
            x = t.step(x, rng.nextDouble());
            if (x == b) break;
            if (x == a) ++visits;
        }
        if (ok) {
            sum += visits;
            sumsq += static_cast<double>(visits) * visits;
        }
    }
    checkAborts(aborted, cfg.trials);
    long counted = cfg.trials - aborted;
    double mean = sum / counted;
    double var = (sumsq - sum * mean) / (counted - 1);
    return {mean, std::sqrt(std::max(var, 0.0) / counted), counted, aborted};
}

double hittingProbability(const Graph& g, const std::vector<int>& boundary, const std::vector<int>& target, int x) {
    std::set<int> bset(boundary.begin(), boundary.end());
    std::set<int> tset(target.begin(), target.end());
    for (int v : tset)
        if (!bset.count(v)) throw GraphError("target must be a subset of the boundary");
    BoundaryProblem bp;
    for (int v : bset) {
        bp.boundary.push_back(v);
        bp.values.push_back(tset.count(v) ? 1.0 : 0.0);
    }
    return harmonicExtension(g, bp)[x];
}

McEstimate hittingProbabilityMc(const Graph& g, const std::vector<int>& boundary, const std::vector<int>& target,
                                int x, const WalkConfig& cfg) {
    checkConfig(cfg);
    std::set<int> bset(boundary.begin(), boundary.end());
    std::set<int> tset(target.begin(), target.end());
    TransitionStructure t(g);
    long max_steps = defaultMaxSteps(g, cfg);
    long hits = 0, aborted = 0;
    for (long trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng(cfg.seed, static_cast<uint64_t>(trial));
        int v = x;
        long steps = 0;
        while (!bset.count(v)) {
            if (steps++ >= max_steps) {
                ++aborted;
                break;
            }
            v = t.step(v, rng.nextDouble());
        }
        if (bset.count(v) && tset.count(v)) ++hits;
    }
    checkAborts(aborted, cfg.trials);
    long counted = cfg.trials - aborted;
    double p = static_cast<double>(hits) / counted;
    return {p, std::sqrt(p * (1.0 - p) / counted), counted, aborted};
}

}  // namespace epidemetric

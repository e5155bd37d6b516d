#ifndef EPIDEMETRIC_RANDOMWALK_HPP
#define EPIDEMETRIC_RANDOMWALK_HPP

#include <cstdint>
#include <vector>

#include "epidemetric/graph.hpp"

namespace epidemetric {

/// Counter-based 64-bit generator (splitmix64 over a mixed (seed, stream)
/// state). Substreams indexed by trial are independent of evaluation order.
class SplitMix64 {
  public:
    SplitMix64(uint64_t seed, uint64_t stream);

    uint64_t next();
    double nextDouble();  // uniform in [0, 1)

  private:
    uint64_t state_;
};

/// Row-stochastic transition structure P(x,y) = C(x,y)/C(x) with precomputed
/// cumulative conductance rows for inverse-CDF neighbor sampling.
class TransitionStructure {
  public:
    explicit TransitionStructure(const Graph& g);

    double probability(int x, int y) const;
    double localConductance(int x) const { return local_[x]; }

    // Next vertex via inverse CDF over the cumulative conductance row.
    int step(int x, double u) const;

  private:
    const Graph* g_;
    std::vector<double> local_;                   // C(x)
    std::vector<std::vector<double>> cumulative_; // per vertex, aligned with neighbors(x)
};

// pi(x) = deg(x) / sum_z deg(z).
std::vector<double> stationary(const Graph& g);

struct WalkConfig {
    uint64_t seed = 0;
    long trials = 100000;
    long max_steps = 0;  // 0: default 100 * N^2
};

struct McEstimate {
    double estimate;
    double stderror;
    long trials;
    long aborted;
};

// Monte Carlo estimate of the escape probability P_a(tau_b < tau_a^+).
McEstimate escapeProbabilityMc(const Graph& g, int a, int b, const WalkConfig& cfg);

// Monte Carlo estimate of G_b(a,a): expected visits to a (counting t=0)
// before hitting b.
McEstimate greenFunctionMc(const Graph& g, int a, int b, const WalkConfig& cfg);

// Exact probability that the walk from x hits the target subset of B before
// the rest of B, via the Dirichlet solver.
double hittingProbability(const Graph& g, const std::vector<int>& boundary, const std::vector<int>& target, int x);

// MC cross-check of hittingProbability.
McEstimate hittingProbabilityMc(const Graph& g, const std::vector<int>& boundary, const std::vector<int>& target,
                                int x, const WalkConfig& cfg);

}  // namespace epidemetric

#endif

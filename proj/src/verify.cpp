#include "epidemetric/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "epidemetric/electrical.hpp"
#include "epidemetric/epidemic.hpp"
#include "epidemetric/variational.hpp"

namespace epidemetric {

bool VerifyReport::allPass() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

std::string VerifyReport::toJson() const {
    nlohmann::json j;
    j["all_pass"] = allPass();
    j["suites"] = nlohmann::json::array();
    for (const SuiteResult& s : suites)
        j["suites"].push_back({{"name", s.name},
                               {"max_violation", s.max_violation},
                               {"tolerance", s.tolerance},
                               {"pass", s.pass},
                               {"detail", s.detail}});
    return j.dump(2);
}

namespace {

struct Tracker {
    double worst = -std::numeric_limits<double>::infinity();
    std::string detail;

    void observe(double violation, const std::string& where) {
        if (violation > worst) {
            worst = violation;
            detail = where;
        }
    }

    SuiteResult finish(const std::string& name, double tol) const {
        bool seen = std::isfinite(worst);
        return {name, seen ? worst : 0.0, tol, !seen || worst <= tol, worst > tol ? detail : ""};
    }
};

std::string pairTag(size_t gi, int a, int b) {
    std::ostringstream os;
    os << "graph " << gi << " pair (" << a + 1 << "," << b + 1 << ")";
    return os.str();
}

}  // namespace

VerifyReport runVerification(const std::vector<Graph>& graphs, uint64_t seed) {
    VerifyReport report;
    Tracker power_oracle, metric, domination, tree_eq, rayleigh, fourway, bruteforce, upperbound, delta_bound;
    std::mt19937_64 rng(seed);

    for (size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        int n = g.numVertices();
        PairMatrix dist = allPairsDistances(g);
        PairMatrix power = matrixPowerDistances(g);
        PairMatrix reff = effectiveResistanceMatrix(g);
        bool is_tree = g.numEdges() == n - 1;

        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                power_oracle.observe(std::abs(power(a, b) - dist(a, b)), pairTag(gi, a, b));
                // R_eff <= hop distance (and tree equality) are unit-weight statements
                if (g.unitWeights()) domination.observe(reff(a, b) - dist(a, b), pairTag(gi, a, b));
                metric.observe(-reff(a, b), pairTag(gi, a, b) + " positivity");
                if (is_tree && g.unitWeights()) tree_eq.observe(std::abs(reff(a, b) - dist(a, b)), pairTag(gi, a, b));
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (a != b && b != c && a != c)
                        metric.observe(reff(a, c) - reff(a, b) - reff(b, c), pairTag(gi, a, c) + " via " + std::to_string(b + 1));

        // Rayleigh: lower one edge's weight (raise its resistance); no R_eff may drop
        for (int rep = 0; rep < 10; ++rep) {
            int e = std::uniform_int_distribution<int>(0, g.numEdges() - 1)(rng);
            double factor = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
            Graph g2 = g.withEdgeWeight(e, g.edge(e).weight * factor);
            PairMatrix reff2 = effectiveResistanceMatrix(g2);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    rayleigh.observe(reff(a, b) - reff2(a, b), pairTag(gi, a, b) + " edge " + std::to_string(e));
        }

        // modulus = capacity = 1/R_eff (spectral and grounded backends)
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                double cap = capacity(g, a, b);
                double ceff_spec = 1.0 / reff(a, b);
                double ceff_grounded = 1.0 / effectiveResistanceGrounded(g, a, b);
                double scale = std::max({cap, ceff_spec, ceff_grounded});
                double dev = std::max(std::abs(cap - ceff_spec), std::abs(cap - ceff_grounded)) / scale;
                fourway.observe(dev, pairTag(gi, a, b));
                if (n <= 8) {
                    double bf = modulusBruteforce(g, a, b).value;
                    bruteforce.observe(std::abs(cap - bf) / std::max(cap, bf), pairTag(gi, a, b));
                }
            }
        }

        if (g.unitWeights()) {
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    ModulusBound mb = epidemicModulusBound(g, a, b);
                    upperbound.observe(mb.d2_mod - mb.epidemic, pairTag(gi, a, b));
                    double delta = reff(a, b) * mb.epidemic / (dist(a, b) * dist(a, b));
                    delta_bound.observe(1.0 - delta, pairTag(gi, a, b));
                }
            }
        }
    }

    report.suites.push_back(power_oracle.finish("matrix_power_equals_bfs", 0.0));
    report.suites.push_back(metric.finish("reff_metric", 1e-8));
    report.suites.push_back(domination.finish("reff_le_graph_distance", 1e-9));
    report.suites.push_back(tree_eq.finish("tree_equality", 1e-9));
    report.suites.push_back(rayleigh.finish("rayleigh_monotonicity", 1e-9));
    report.suites.push_back(fourway.finish("modulus_capacity_conductance_agreement", 1e-8));
    report.suites.push_back(bruteforce.finish("modulus_bruteforce_oracle", 1e-5));
    report.suites.push_back(upperbound.finish("epidemic_upper_bound", 1e-9));
    report.suites.push_back(delta_bound.finish("discrepancy_ge_one", 1e-9));
    return report;
}

}  // namespace epidemetric

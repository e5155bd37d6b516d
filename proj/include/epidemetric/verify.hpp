#ifndef EPIDEMETRIC_VERIFY_HPP
#define EPIDEMETRIC_VERIFY_HPP

#include <string>
#include <vector>

#include "epidemetric/graph.hpp"

namespace epidemetric {

struct SuiteResult {
    std::string name;
    double max_violation;  // <= 0 means no violation
    double tolerance;
    bool pass;
    std::string detail;  // offending pair and values when failing
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool allPass() const;
    std::string toJson() const;
};

// Runs the identity/inequality suites over the given graphs:
// matrix-power oracle vs BFS, R_eff metric axioms, R_eff <= d_G,
// tree equality (trees only), Rayleigh monotonicity, modulus = capacity =
// 1/R_eff agreement (plus the brute-force oracle on N <= 8), the epidemic
// upper bound and delta >= 1 (unit-weight graphs only).
VerifyReport runVerification(const std::vector<Graph>& graphs, uint64_t seed = 7);

}  // namespace epidemetric

#endif

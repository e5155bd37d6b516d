#ifndef EPIDEMETRIC_VARIATIONAL_HPP
#define EPIDEMETRIC_VARIATIONAL_HPP

#include <optional>
#include <vector>

#include "epidemetric/graph.hpp"

namespace epidemetric {

/// Dirichlet boundary data: values prescribed on a non-empty vertex subset.
struct BoundaryProblem {
    std::vector<int> boundary;        // distinct vertices
    std::vector<double> values;       // same length as boundary
};

// Solve the Dirichlet problem: h = values on the boundary, conductance-weighted
// mean of neighbors at every interior vertex.
std::vector<double> harmonicExtension(const Graph& g, const BoundaryProblem& bp);

// Harmonic function with U(a) = 0, U(b) = 1.
std::vector<double> capacitaryFunction(const Graph& g, int a, int b);

// Gradient density of a vertex function: rho(e) = |u(x) - u(y)|.
EdgeDensity gradientDensity(const Graph& g, const std::vector<double>& u);

// Cap(a,b) = gradient energy of the capacitary function; equals 1/R_eff(a,b).
double capacity(const Graph& g, int a, int b);

// Mod(a,b) over the family of connected subgraphs containing a and b.
// Production path: equals capacity(a,b).
double modulus(const Graph& g, int a, int b);

// rho-length of a curve: sum of rho over the curve's edges.
double rhoLength(const EdgeDensity& density, const Subgraph& curve);

struct AdmissibilityResult {
    bool admissible;
    std::vector<int> witness;  // violating a-b path (vertex sequence) when inadmissible
};

// Checks rho-length >= 1 over all simple a-b paths, which suffices for the
// whole curve family: every connected subgraph containing a and b contains a
// simple a-b path and rho-length is monotone under edge inclusion.
AdmissibilityResult isAdmissible(const Graph& g, const EdgeDensity& density, int a, int b);

struct BruteforceModulus {
    double value;
    EdgeDensity density;       // certified admissible (scaled to feasibility)
    size_t num_paths;
};

// Independent oracle: enumerate all simple a-b paths and minimize
// sum_e w(e) rho(e)^2 subject to per-path length >= 1, rho >= 0,
// by cyclic dual coordinate ascent. Guarded to small graphs.
BruteforceModulus modulusBruteforce(const Graph& g, int a, int b);

struct ModulusBound {
    double d2_mod;        // d_G(a,b)^2 * Mod(a,b)
    double epidemic;      // Epidemic(a,b)
    double union_bound;   // |Omega_union| / d^2, the sharper upper bound on Mod
    bool holds;           // d2_mod <= epidemic (+tolerance)
    bool sharper_holds;   // Mod <= union_bound (+tolerance)
};

ModulusBound epidemicModulusBound(const Graph& g, int a, int b);

}  // namespace epidemetric

#endif

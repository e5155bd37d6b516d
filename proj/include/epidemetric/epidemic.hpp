#ifndef EPIDEMETRIC_EPIDEMIC_HPP
#define EPIDEMETRIC_EPIDEMIC_HPP

#include "epidemetric/graph.hpp"

namespace epidemetric {

/// Epidemic(a,b) = |Omega(a,d)| + |Omega(b,d)| with d = d_G(a,b).
struct EpidemicResult {
    int a;
    int b;
    int distance;
    int vol_a;
    int vol_b;
    int value;       // vol_a + vol_b
    int union_size;  // |Omega(a,d) U Omega(b,d)| in edges, support of the admissible density
};

// Omega(x,r): subgraph induced by the radius-r metric ball around x.
Subgraph omega(const Graph& g, int x, int r);

EpidemicResult epidemic(const Graph& g, int a, int b);

PairMatrix epidemicMatrix(const Graph& g);

// The admissible density from the modulus upper bound: rho = 1/d on the
// edges of Omega(a,d) U Omega(b,d), zero elsewhere.
EdgeDensity epidemicDensity(const Graph& g, int a, int b);

// delta(a,b) = R_eff(a,b) * Epidemic(a,b) / d_G(a,b)^2; >= 1 always.
double discrepancy(const Graph& g, int a, int b);

// Batch delta from precomputed tables.
PairMatrix discrepancyMatrix(const PairMatrix& reff, const PairMatrix& epi, const PairMatrix& dist);

}  // namespace epidemetric

#endif

#ifndef EPIDEMETRIC_DATASETS_HPP
#define EPIDEMETRIC_DATASETS_HPP

#include <cstdint>
#include <string>

#include "epidemetric/graph.hpp"

namespace epidemetric {

Graph pathGraph(int n);
Graph starGraph(int n);      // n vertices: hub (vertex 0) + n-1 leaves
Graph completeGraph(int n);
// K_n plus a pendant vertex attached to vertex 0 (n+1 vertices total).
Graph completePendant(int n);

// Seeded Erdos-Renyi G(n, p) conditioned on connectivity; optional random
// weights uniform in [w_lo, w_hi] (w_lo == w_hi == 1 gives unit weights).
Graph randomConnectedGraph(int n, double p, uint64_t seed, double w_lo = 1.0, double w_hi = 1.0);

// Seeded uniform random labeled tree (Pruefer sequence).
Graph randomTree(int n, uint64_t seed);

// Built-in dataset names: "karate", "path:N", "star:N", "complete:N",
// "complete-pendant:N".
Graph builtinDataset(const std::string& name);

}  // namespace epidemetric

#endif

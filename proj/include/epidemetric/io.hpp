#ifndef EPIDEMETRIC_IO_HPP
#define EPIDEMETRIC_IO_HPP

#include <string>

#include "epidemetric/graph.hpp"
#include "epidemetric/clustering.hpp"

namespace epidemetric {

// Round-trip-safe formatting for 64-bit floats (default 17 significant digits).
std::string formatDouble(double v, int digits = 17);

// PairMatrix as CSV with a 1-based header row/column.
std::string pairMatrixToCsv(const PairMatrix& m, int digits = 17);
PairMatrix pairMatrixFromCsv(const std::string& text);

std::string partitionToCsv(const Partition& p);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

// Load a graph from a path: .csv is parsed as an adjacency matrix, anything
// else as an edge list.
Graph loadGraph(const std::string& path);

}  // namespace epidemetric

#endif

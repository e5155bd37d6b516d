#ifndef EPIDEMETRIC_GRAPH_HPP
#define EPIDEMETRIC_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace epidemetric {

class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
  public:
    ParseError(const std::string& msg, int line) : GraphError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Undirected edge with a fixed orientation: tail = smaller vertex id.
struct Edge {
    int tail;
    int head;
    double weight;
};

/// Immutable simple connected weighted graph. Vertices are 0-based internally;
/// file formats use 1-based labels.
class Graph {
  public:
    Graph(int n, std::vector<Edge> edges);

    static Graph fromEdgeList(const std::string& text);
    static Graph fromAdjacencyCsv(const std::string& text);

    int numVertices() const { return n_; }
    int numEdges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    /// Neighbors of x as (neighbor, edge id) pairs.
    const std::vector<std::pair<int, int>>& neighbors(int x) const { return adj_[x]; }

    /// Weighted degree: sum of incident edge weights.
    double degree(int x) const;

    bool hasEdge(int x, int y) const;
    /// Edge id for {x,y}, or -1.
    int edgeId(int x, int y) const;

    bool unitWeights() const { return unit_weights_; }

    /// Copy with one edge's weight replaced.
    Graph withEdgeWeight(int e, double w) const;

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    bool unit_weights_;
};

/// Induced subgraph: all parent edges with both endpoints in the vertex set.
struct Subgraph {
    const Graph* parent;
    std::vector<int> vertices;   // sorted
    std::vector<int> edge_ids;   // parent edge ids

    int volume() const { return static_cast<int>(edge_ids.size()); }
    bool containsVertex(int x) const;
};

/// Symmetric N x N table of a pairwise quantity.
class PairMatrix {
  public:
    explicit PairMatrix(int n) : n_(n), values_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double operator()(int i, int j) const { return values_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        values_[static_cast<size_t>(i) * n_ + j] = v;
        values_[static_cast<size_t>(j) * n_ + i] = v;
    }
    bool isSymmetric(double tol = 0.0) const;
    bool hasZeroDiagonal(double tol = 0.0) const;

  private:
    int n_;
    std::vector<double> values_;
};

/// Nonnegative value per edge, indexed by edge id.
struct EdgeDensity {
    std::vector<double> rho;

    double energy(const Graph& g) const;  // sum_e w(e) * rho(e)^2
};

// BFS hop distances from x (unit weights regardless of edge weights).
std::vector<int> bfsDistances(const Graph& g, int x);

// All-pairs hop distances via BFS.
PairMatrix allPairsDistances(const Graph& g);

// The 0/1 matrix-power routine: B = K + I, normalize powers, D = sum(1 - B_k).
// Retained as a cross-check oracle for BFS; O(N^4).
PairMatrix matrixPowerDistances(const Graph& g);

// Metric ball { y : d_G(x,y) <= r }, sorted.
std::vector<int> ball(const Graph& g, int x, int r);

Subgraph induced(const Graph& g, const std::vector<int>& vertex_set);

int diameter(const Graph& g);

}  // namespace epidemetric

#endif

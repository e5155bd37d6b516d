#include "epidemetric/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace epidemetric {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ <= 0) throw GraphError("graph must have at least one vertex");
    adj_.resize(n_);
    std::set<std::pair<int, int>> seen;
    unit_weights_ = true;
    for (size_t e = 0; e < edges_.size(); ++e) {
        Edge& ed = edges_[e];
        if (ed.tail > ed.head) std::swap(ed.tail, ed.head);
        if (ed.tail < 0 || ed.head >= n_) throw GraphError("edge endpoint out of range");
        if (ed.tail == ed.head) throw GraphError("self-loop on vertex " + std::to_string(ed.tail + 1));
        if (!(ed.weight > 0.0)) throw GraphError("non-positive edge weight");
        if (!seen.insert({ed.tail, ed.head}).second)
            throw GraphError("duplicate edge {" + std::to_string(ed.tail + 1) + "," + std::to_string(ed.head + 1) + "}");
        if (ed.weight != 1.0) unit_weights_ = false;
        adj_[ed.tail].push_back({ed.head, static_cast<int>(e)});
        adj_[ed.head].push_back({ed.tail, static_cast<int>(e)});
    }
    // connectivity check from vertex 0
    std::vector<int> dist = bfsDistances(*this, 0);
    for (int v = 0; v < n_; ++v) {
        if (dist[v] < 0)
            throw GraphError("graph is disconnected: vertex " + std::to_string(1) + " cannot reach vertex " +
                             std::to_string(v + 1));
    }
}

double Graph::degree(int x) const {
    double d = 0.0;
    for (auto [y, e] : adj_[x]) d += edges_[e].weight;
    return d;
}

bool Graph::hasEdge(int x, int y) const { return edgeId(x, y) >= 0; }

int Graph::edgeId(int x, int y) const {
    for (auto [z, e] : adj_[x])
        if (z == y) return e;
    return -1;
}

Graph Graph::withEdgeWeight(int e, double w) const {
    std::vector<Edge> es = edges_;
    es.at(e).weight = w;
    return Graph(n_, std::move(es));
}

namespace {

std::vector<std::string> splitLines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) lines.push_back(cur);
    return lines;
}

}  // namespace

Graph Graph::fromEdgeList(const std::string& text) {
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    int max_label = 0;
    auto lines = splitLines(text);
    for (size_t li = 0; li < lines.size(); ++li) {
        int lineno = static_cast<int>(li) + 1;
        std::string line = lines[li];
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long u, v;
        double w = 1.0;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) throw ParseError("expected two vertex labels", lineno);
        std::string rest;
        if (ls >> rest) {
            try {
                size_t pos = 0;
                w = std::stod(rest, &pos);
                if (pos != rest.size()) throw std::invalid_argument(rest);
            } catch (const std::exception&) {
                throw ParseError("bad weight token '" + rest + "'", lineno);
            }
            std::string extra;
            if (ls >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
        }
        if (u < 1 || v < 1) throw ParseError("vertex labels must be >= 1", lineno);
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), lineno);
        if (!(w > 0.0)) throw ParseError("non-positive weight", lineno);
        int a = static_cast<int>(std::min(u, v)) - 1;
        int b = static_cast<int>(std::max(u, v)) - 1;
        if (!seen.insert({a, b}).second)
            throw ParseError("duplicate edge {" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}", lineno);
        edges.push_back({a, b, w});
        max_label = std::max(max_label, b + 1);
    }
    if (edges.empty()) throw GraphError("no edges in input");
    return Graph(max_label, std::move(edges));
}

Graph Graph::fromAdjacencyCsv(const std::string& text) {
    auto lines = splitLines(text);
    std::vector<std::vector<double>> rows;
    for (size_t li = 0; li < lines.size(); ++li) {
        int lineno = static_cast<int>(li) + 1;
        const std::string& line = lines[li];
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ParseError("bad matrix entry '" + cell + "'", lineno);
            }
        }
        rows.push_back(std::move(row));
    }
    int n = static_cast<int>(rows.size());
    if (n == 0) throw GraphError("empty adjacency matrix");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw GraphError("adjacency matrix is not square");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        if (rows[i][i] != 0.0) throw GraphError("nonzero diagonal entry (self-loop)");
        for (int j = i + 1; j < n; ++j) {
            if (rows[i][j] != rows[j][i]) throw GraphError("adjacency matrix is not symmetric");
            if (rows[i][j] != 0.0) edges.push_back({i, j, rows[i][j]});
        }
    }
    return Graph(n, std::move(edges));
}

bool Subgraph::containsVertex(int x) const {
    return std::binary_search(vertices.begin(), vertices.end(), x);
}

bool PairMatrix::isSymmetric(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

bool PairMatrix::hasZeroDiagonal(double tol) const {
    for (int i = 0; i < n_; ++i)
        if (std::abs((*this)(i, i)) > tol) return false;
    return true;
}

double EdgeDensity::energy(const Graph& g) const {
    double s = 0.0;
    for (int e = 0; e < g.numEdges(); ++e) s += g.edge(e).weight * rho[e] * rho[e];
    return s;
}

std::vector<int> bfsDistances(const Graph& g, int x) {
    std::vector<int> dist(g.numVertices(), -1);
    std::deque<int> q{x};
    dist[x] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto [v, e] : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

PairMatrix allPairsDistances(const Graph& g) {
    int n = g.numVertices();
    PairMatrix d(n);
    for (int x = 0; x < n; ++x) {
        auto dx = bfsDistances(g, x);
        for (int y = x + 1; y < n; ++y) d.set(x, y, dx[y]);
    }
    return d;
}

PairMatrix matrixPowerDistances(const Graph& g) {
    int n = g.numVertices();
    // B = K + I as a boolean reachability matrix; B_k = 0/1-normalized B^k.
    std::vector<std::vector<char>> b(n, std::vector<char>(n, 0));
    std::vector<std::vector<char>> bk(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) b[i][i] = bk[i][i] = 1;
    for (const Edge& e : g.edges()) {
        b[e.tail][e.head] = b[e.head][e.tail] = 1;
    }
    PairMatrix d(n);
    std::vector<std::vector<double>> acc(n, std::vector<double>(n, 0.0));
    // k = 0 term: C_0 = 1 - I
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) acc[i][j] += 1.0;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (bk[i][l])
                    for (int j = 0; j < n; ++j)
                        if (b[l][j]) next[i][j] = 1;
        bk = std::move(next);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!bk[i][j]) acc[i][j] += 1.0;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.set(i, j, acc[i][j]);
    return d;
}

std::vector<int> ball(const Graph& g, int x, int r) {
    auto dist = bfsDistances(g, x);
    std::vector<int> vs;
    for (int v = 0; v < g.numVertices(); ++v)
        if (dist[v] <= r) vs.push_back(v);
    return vs;
}

Subgraph induced(const Graph& g, const std::vector<int>& vertex_set) {
    Subgraph s;
    s.parent = &g;
    s.vertices = vertex_set;
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    for (int v : s.vertices)
        if (v < 0 || v >= g.numVertices()) throw GraphError("subgraph vertex out of range");
    for (int e = 0; e < g.numEdges(); ++e) {
        const Edge& ed = g.edge(e);
        if (s.containsVertex(ed.tail) && s.containsVertex(ed.head)) s.edge_ids.push_back(e);
    }
    return s;
}

int diameter(const Graph& g) {
    int d = 0;
    for (int x = 0; x < g.numVertices(); ++x) {
        auto dist = bfsDistances(g, x);
        d = std::max(d, *std::max_element(dist.begin(), dist.end()));
    }
    return d;
}

}  // namespace epidemetric

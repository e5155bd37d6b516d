#include "epidemetric/datasets.hpp"

#include <random>

#include "epidemetric/clustering.hpp"

namespace epidemetric {

Graph pathGraph(int n) {
    if (n < 2) throw GraphError("path graph needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph(n, std::move(edges));
}

Graph starGraph(int n) {
    if (n < 2) throw GraphError("star graph needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
    return Graph(n, std::move(edges));
}

Graph completeGraph(int n) {
    if (n < 2) throw GraphError("complete graph needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    return Graph(n, std::move(edges));
}

Graph completePendant(int n) {
    if (n < 2) throw GraphError("pendant construction needs K_N with N >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
    edges.push_back({0, n, 1.0});  // pendant vertex
    return Graph(n + 1, std::move(edges));
}

Graph randomConnectedGraph(int n, double p, uint64_t seed, double w_lo, double w_hi) {
    if (n < 2) throw GraphError("random graph needs at least 2 vertices");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_real_distribution<double> wdist(w_lo, w_hi);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < p) edges.push_back({i, j, w_lo == w_hi ? w_lo : wdist(rng)});
        if (edges.empty()) continue;
        try {
            return Graph(n, std::move(edges));
        } catch (const GraphError&) {
            continue;  // disconnected draw, retry
        }
    }
    throw GraphError("failed to draw a connected graph; p too small?");
}

Graph randomTree(int n, uint64_t seed) {
    if (n < 2) throw GraphError("tree needs at least 2 vertices");
    if (n == 2) return Graph(2, {{0, 1, 1.0}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = pick(rng);
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    std::vector<Edge> edges;
    std::vector<char> used(n, 0);
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.push_back({leaf, x, 1.0});
                used[leaf] = 1;
                --degree[x];
                break;
            }
        }
    }
    int u = -1, v = -1;
    for (int x = 0; x < n; ++x) {
        if (degree[x] == 1 && !used[x]) {
            if (u < 0)
                u = x;
            else
                v = x;
        }
    }
    edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

Graph builtinDataset(const std::string& name) {
    if (name == "karate") return karateGraph();
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string kind = name.substr(0, colon);
        int n = 0;
        try {
            n = std::stoi(name.substr(colon + 1));
        } catch (const std::exception&) {
            throw GraphError("bad dataset size in '" + name + "'");
        }
        if (kind == "path") return pathGraph(n);
        if (kind == "star") return starGraph(n);
        if (kind == "complete") return completeGraph(n);
        if (kind == "complete-pendant") return completePendant(n);
    }
    throw GraphError("unknown dataset '" + name + "'");
}

}  // namespace epidemetric

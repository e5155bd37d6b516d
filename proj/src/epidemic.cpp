#include "epidemetric/epidemic.hpp"

#include <algorithm>
#include <set>

#include "epidemetric/electrical.hpp"

namespace epidemetric {

Subgraph omega(const Graph& g, int x, int r) { return induced(g, ball(g, x, r)); }

EpidemicResult epidemic(const Graph& g, int a, int b) {
    EpidemicResult res;
    res.a = a;
    res.b = b;
    if (a == b) {
        res.distance = 0;
        res.vol_a = res.vol_b = res.value = res.union_size = 0;
        return res;
    }
    auto da = bfsDistances(g, a);
    res.distance = da[b];
    Subgraph oa = omega(g, a, res.distance);
    Subgraph ob = omega(g, b, res.distance);
    res.vol_a = oa.volume();
    res.vol_b = ob.volume();
    res.value = res.vol_a + res.vol_b;
    std::set<int> u(oa.edge_ids.begin(), oa.edge_ids.end());
    u.insert(ob.edge_ids.begin(), ob.edge_ids.end());
    res.union_size = static_cast<int>(u.size());
    return res;
}

PairMatrix epidemicMatrix(const Graph& g) {
    int n = g.numVertices();
    PairMatrix m(n);
    // reuse the per-source BFS across all radii: Omega volumes depend only on
    // the ball membership, so precompute distance rows once
    std::vector<std::vector<int>> dist(n);
    for (int x = 0; x < n; ++x) dist[x] = bfsDistances(g, x);
    auto ballVolume = [&](int x, int r) {
        int vol = 0;
        for (const Edge& e : g.edges())
            if (dist[x][e.tail] <= r && dist[x][e.head] <= r) ++vol;
        return vol;
    };
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int d = dist[a][b];
            m.set(a, b, static_cast<double>(ballVolume(a, d) + ballVolume(b, d)));
        }
    }
    return m;
}

EdgeDensity epidemicDensity(const Graph& g, int a, int b) {
    if (a == b) throw GraphError("epidemic density requires distinct endpoints");
    auto da = bfsDistances(g, a);
    auto db = bfsDistances(g, b);
    int d = da[b];
    EdgeDensity rho;
    rho.rho.assign(g.numEdges(), 0.0);
    for (int e = 0; e < g.numEdges(); ++e) {
        const Edge& ed = g.edge(e);
        bool in_a = da[ed.tail] <= d && da[ed.head] <= d;
        bool in_b = db[ed.tail] <= d && db[ed.head] <= d;
        if (in_a || in_b) rho.rho[e] = 1.0 / d;
    }
    return rho;
}

double discrepancy(const Graph& g, int a, int b) {
    if (a == b) throw GraphError("discrepancy requires distinct endpoints");
    EpidemicResult epi = epidemic(g, a, b);
    double reff = effectiveResistance(g, a, b);
    return reff * epi.value / (static_cast<double>(epi.distance) * epi.distance);
}

PairMatrix discrepancyMatrix(const PairMatrix& reff, const PairMatrix& epi, const PairMatrix& dist) {
    int n = reff.size();
    PairMatrix m(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) m.set(a, b, reff(a, b) * epi(a, b) / (dist(a, b) * dist(a, b)));
    return m;
}

}  // namespace epidemetric

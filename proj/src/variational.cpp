#include "epidemetric/variational.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "epidemetric/electrical.hpp"
#include "epidemetric/epidemic.hpp"

namespace epidemetric {

std::vector<double> harmonicExtension(const Graph& g, const BoundaryProblem& bp) {
    if (bp.boundary.empty()) throw GraphError("boundary set must be non-empty");
    if (bp.boundary.size() != bp.values.size()) throw GraphError("boundary/value size mismatch");
    int n = g.numVertices();
    std::vector<double> h(n, 0.0);
    std::vector<char> is_boundary(n, 0);
    std::set<int> seen;
    for (size_t i = 0; i < bp.boundary.size(); ++i) {
        int x = bp.boundary[i];
        if (x < 0 || x >= n) throw GraphError("boundary vertex out of range");
        if (!seen.insert(x).second) throw GraphError("duplicate boundary vertex");
        is_boundary[x] = 1;
        h[x] = bp.values[i];
    }
    std::vector<int> interior;
    std::vector<int> pos(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!is_boundary[v]) {
            pos[v] = static_cast<int>(interior.size());
            interior.push_back(v);
        }
    }
    if (interior.empty()) return h;
    int m = static_cast<int>(interior.size());
    // L_II h_I = -L_IB h_B; the interior block is irreducibly diagonally
    // dominant on a connected graph, so LDLT is safe
    Eigen::MatrixXd lii = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
    for (int idx = 0; idx < m; ++idx) {
        int x = interior[idx];
        for (auto [y, e] : g.neighbors(x)) {
            double w = g.edge(e).weight;
            lii(idx, idx) += w;
            if (is_boundary[y])
                rhs(idx) += w * h[y];
            else
                lii(idx, pos[y]) -= w;
        }
    }
    Eigen::VectorXd sol = lii.ldlt().solve(rhs);
    for (int idx = 0; idx < m; ++idx) h[interior[idx]] = sol(idx);
    return h;
}

std::vector<double> capacitaryFunction(const Graph& g, int a, int b) {
    if (a == b) throw GraphError("capacitary function requires distinct endpoints");
    BoundaryProblem bp;
    bp.boundary = {a, b};
    bp.values = {0.0, 1.0};
    return harmonicExtension(g, bp);
}

EdgeDensity gradientDensity(const Graph& g, const std::vector<double>& u) {
    EdgeDensity d;
    d.rho.resize(g.numEdges());
    for (int e = 0; e < g.numEdges(); ++e) d.rho[e] = std::abs(u[g.edge(e).head] - u[g.edge(e).tail]);
    return d;
}

double capacity(const Graph& g, int a, int b) {
    return gradientDensity(g, capacitaryFunction(g, a, b)).energy(g);
}

double modulus(const Graph& g, int a, int b) { return capacity(g, a, b); }

double rhoLength(const EdgeDensity& density, const Subgraph& curve) {
    double s = 0.0;
    for (int e : curve.edge_ids) s += density.rho[e];
    return s;
}

namespace {

constexpr size_t kPathBudget = 2'000'000;  // total stored edge slots

// All simple a-b paths as edge-id sequences.
std::vector<std::vector<int>> enumeratePaths(const Graph& g, int a, int b) {
    std::vector<std::vector<int>> paths;
    std::vector<char> visited(g.numVertices(), 0);
    std::vector<int> stack;
    size_t used = 0;
    auto dfs = [&](auto&& self, int x) -> void {
        if (x == b) {
            used += stack.size();
            if (used > kPathBudget) throw GraphError("path enumeration budget exceeded");
            paths.push_back(stack);
            return;
        }
        visited[x] = 1;
        for (auto [y, e] : g.neighbors(x)) {
            if (visited[y]) continue;
            stack.push_back(e);
            self(self, y);
            stack.pop_back();
        }
        visited[x] = 0;
    };
    dfs(dfs, a);
    return paths;
}

}  // namespace

AdmissibilityResult isAdmissible(const Graph& g, const EdgeDensity& density, int a, int b) {
    if (a == b) throw GraphError("admissibility requires distinct endpoints");
    if (g.numVertices() > 14) throw GraphError("admissibility check limited to N <= 14");
    AdmissibilityResult res{true, {}};
    std::vector<char> visited(g.numVertices(), 0);
    std::vector<int> vstack{a};
    std::vector<int> estack;
    const double tol = 1e-12;
    auto dfs = [&](auto&& self, int x, double len) -> bool {
        if (x == b) {
            if (len < 1.0 - tol) {
                res.admissible = false;
                res.witness = vstack;
                return true;
            }
            return false;
        }
        visited[x] = 1;
        for (auto [y, e] : g.neighbors(x)) {
            if (visited[y]) continue;
            vstack.push_back(y);
            bool found = self(self, y, len + density.rho[e]);
            vstack.pop_back();
            if (found) {
                visited[x] = 0;
                return true;
            }
        }
        visited[x] = 0;
        return false;
    };
    dfs(dfs, a, 0.0);
    return res;
}

BruteforceModulus modulusBruteforce(const Graph& g, int a, int b) {
    if (a == b) throw GraphError("modulus requires distinct endpoints");
    if (g.numVertices() > 10) throw GraphError("brute-force modulus limited to N <= 10");
    auto paths = enumeratePaths(g, a, b);
    if (paths.empty()) throw GraphError("no a-b path");

    int m = g.numEdges();
    std::vector<double> rho(m, 0.0);
    std::vector<double> lambda(paths.size(), 0.0);
    // 1/(2w) per edge, and per-path curvature q = sum over its edges
    std::vector<double> half_inv_w(m);
    for (int e = 0; e < m; ++e) half_inv_w[e] = 0.5 / g.edge(e).weight;
    std::vector<double> q(paths.size(), 0.0);
    for (size_t p = 0; p < paths.size(); ++p)
        for (int e : paths[p]) q[p] += half_inv_w[e];

    // Hildreth cyclic dual coordinate ascent on the path constraints:
    // each step makes one constraint tight (or drops its multiplier to 0)
    const double tol = 1e-9;
    for (int sweep = 0; sweep < 20000; ++sweep) {
        double max_change = 0.0;
        for (size_t p = 0; p < paths.size(); ++p) {
            double len = 0.0;
            for (int e : paths[p]) len += rho[e];
            double delta = (1.0 - len) / q[p];
            double nl = std::max(0.0, lambda[p] + delta);
            double actual = nl - lambda[p];
            if (actual == 0.0) continue;
            lambda[p] = nl;
            for (int e : paths[p]) rho[e] += actual * half_inv_w[e];
            max_change = std::max(max_change, std::abs(actual) * q[p]);
        }
        if (max_change < tol) break;
    }

    // certify feasibility: scale by the shortest rho-length
    double min_len = std::numeric_limits<double>::infinity();
    for (const auto& path : paths) {
        double len = 0.0;
        for (int e : path) len += rho[e];
        min_len = std::min(min_len, len);
    }
    if (min_len < 1.0)
        for (double& r : rho) r /= min_len;

    BruteforceModulus out;
    out.density.rho = std::move(rho);
    out.value = out.density.energy(g);
    out.num_paths = paths.size();
    return out;
}

ModulusBound epidemicModulusBound(const Graph& g, int a, int b) {
    if (a == b) throw GraphError("bound requires distinct endpoints");
    EpidemicResult epi = epidemic(g, a, b);
    double mod = modulus(g, a, b);
    double d2 = static_cast<double>(epi.distance) * epi.distance;
    ModulusBound res;
    res.d2_mod = d2 * mod;
    res.epidemic = epi.value;
    res.union_bound = epi.union_size / d2;
    res.holds = res.d2_mod <= res.epidemic + 1e-9;
    res.sharper_holds = mod <= res.union_bound + 1e-9;
    return res;
}

}  // namespace epidemetric

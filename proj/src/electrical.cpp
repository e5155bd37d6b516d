#include "epidemetric/electrical.hpp"

#include <Eigen/Eigenvalues>

namespace epidemetric {

Eigen::MatrixXd laplacian(const Graph& g) {
    int n = g.numVertices();
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        l(e.tail, e.tail) += e.weight;
        l(e.head, e.head) += e.weight;
        l(e.tail, e.head) -= e.weight;
        l(e.head, e.tail) -= e.weight;
    }
    return l;
}

Eigen::MatrixXd incidence(const Graph& g) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(g.numEdges(), g.numVertices());
    for (int e = 0; e < g.numEdges(); ++e) {
        b(e, g.edge(e).head) = 1.0;
        b(e, g.edge(e).tail) = -1.0;
    }
    return b;
}

SpectralLaplacian::SpectralLaplacian(const Graph& g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g));
    if (solver.info() != Eigen::Success) throw GraphError("Laplacian eigensolver failed to converge");
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
    int n = g.numVertices();
    double lmax = eigenvalues_(n - 1);
    double kernel_tol = 1e-10 * std::max(lmax, 1.0);
    green_ = Eigen::MatrixXd::Zero(n, n);
    int kernel_dim = 0;
    for (int i = 0; i < n; ++i) {
        if (eigenvalues_(i) <= kernel_tol) {
            ++kernel_dim;
            continue;
        }
        green_ += (1.0 / eigenvalues_(i)) * eigenvectors_.col(i) * eigenvectors_.col(i).transpose();
    }
    if (kernel_dim != 1) throw GraphError("Laplacian kernel dimension " + std::to_string(kernel_dim) + ", expected 1");
}

double SpectralLaplacian::effectiveResistance(int a, int b) const {
    if (a == b) return 0.0;
    // eta_ab^T G eta_ab with eta = -1 at a, +1 at b
    return green_(a, a) - 2.0 * green_(a, b) + green_(b, b);
}

Eigen::VectorXd SpectralLaplacian::potential(int a, int b) const {
    Eigen::VectorXd v = green_.col(b) - green_.col(a);
    return v;
}

double CurrentSolution::divergence(const Graph& g, int x) const {
    double out = 0.0;
    for (auto [y, e] : g.neighbors(x)) {
        double flow = current[e];
        out += (g.edge(e).tail == x) ? flow : -flow;
    }
    return out;
}

CurrentSolution unitCurrentFlow(const Graph& g, const SpectralLaplacian& spec, int a, int b) {
    CurrentSolution sol;
    sol.a = a;
    sol.b = b;
    sol.potential = spec.potential(a, b);
    sol.current.resize(g.numEdges());
    // i = WBv: current from tail to head is W(e)(v(head) - v(tail))
    for (int e = 0; e < g.numEdges(); ++e) {
        const Edge& ed = g.edge(e);
        sol.current[e] = ed.weight * (sol.potential(ed.head) - sol.potential(ed.tail));
    }
    sol.strength = sol.divergence(g, a);
    return sol;
}

CurrentSolution unitCurrentFlow(const Graph& g, int a, int b) {
    SpectralLaplacian spec(g);
    return unitCurrentFlow(g, spec, a, b);
}

double effectiveResistance(const Graph& g, int a, int b) {
    return SpectralLaplacian(g).effectiveResistance(a, b);
}

double effectiveResistanceGrounded(const Graph& g, int a, int b) {
    if (a == b) return 0.0;
    int n = g.numVertices();
    Eigen::MatrixXd l = laplacian(g);
    // ground vertex a: drop its row/column
    std::vector<int> keep;
    keep.reserve(n - 1);
    for (int v = 0; v < n; ++v)
        if (v != a) keep.push_back(v);
    Eigen::MatrixXd lr(n - 1, n - 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        for (int j = 0; j < n - 1; ++j) lr(i, j) = l(keep[i], keep[j]);
        if (keep[i] == b) rhs(i) = 1.0;
    }
    Eigen::VectorXd v = lr.ldlt().solve(rhs);
    for (int i = 0; i < n - 1; ++i)
        if (keep[i] == b) return v(i);
    return 0.0;
}

PairMatrix effectiveResistanceMatrix(const Graph& g) {
    SpectralLaplacian spec(g);
    int n = g.numVertices();
    PairMatrix r(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) r.set(a, b, spec.effectiveResistance(a, b));
    return r;
}

double flowEnergy(const Graph& g, const std::vector<double>& flow) {
    double s = 0.0;
    for (int e = 0; e < g.numEdges(); ++e) s += flow[e] * flow[e] / g.edge(e).weight;
    return s;
}

}  // namespace epidemetric

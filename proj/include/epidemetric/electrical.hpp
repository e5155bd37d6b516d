#ifndef EPIDEMETRIC_ELECTRICAL_HPP
#define EPIDEMETRIC_ELECTRICAL_HPP

#include <Eigen/Dense>

#include "epidemetric/graph.hpp"

namespace epidemetric {

// Combinatorial Laplacian L = D - A (weighted).
Eigen::MatrixXd laplacian(const Graph& g);

// Signed incidence matrix, M x N: B(e, head) = +1, B(e, tail) = -1.
// Orientation is the graph's fixed one (tail = smaller id).
Eigen::MatrixXd incidence(const Graph& g);

/// Eigendecomposition of L plus the Green pseudoinverse
/// G = sum_{i>=1} (1/lambda_i) u_i u_i^T. Immutable once built.
class SpectralLaplacian {
  public:
    explicit SpectralLaplacian(const Graph& g);

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
    const Eigen::MatrixXd& green() const { return green_; }

    // R_eff(a,b) = eta_ab^T G eta_ab; 0 when a == b.
    double effectiveResistance(int a, int b) const;

    // Potential of the unit current flow from a to b, gauge sum(v) = 0.
    Eigen::VectorXd potential(int a, int b) const;

  private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
    Eigen::MatrixXd green_;
};

/// Unit current flow from a to b: potential per vertex, signed current per
/// oriented edge (positive = tail to head).
struct CurrentSolution {
    int a;
    int b;
    Eigen::VectorXd potential;
    std::vector<double> current;  // per edge id
    double strength;              // net outflow at a

    // Net outflow at x: sum of currents leaving x.
    double divergence(const Graph& g, int x) const;
};

CurrentSolution unitCurrentFlow(const Graph& g, const SpectralLaplacian& spec, int a, int b);
CurrentSolution unitCurrentFlow(const Graph& g, int a, int b);

// R_eff via the Green operator (builds the eigendecomposition).
double effectiveResistance(const Graph& g, int a, int b);

// R_eff via a grounded direct solve: delete vertex a's row/column, solve the
// reduced SPD system L' v = e_b, read v(b). Independent of the spectral path.
double effectiveResistanceGrounded(const Graph& g, int a, int b);

PairMatrix effectiveResistanceMatrix(const Graph& g);

// Energy(j) = sum_e R(e) j(e)^2 with R(e) = 1/W(e).
double flowEnergy(const Graph& g, const std::vector<double>& flow);

}  // namespace epidemetric

#endif

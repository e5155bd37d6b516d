#include <doctest.h>

#include <random>

#include "epidemetric/datasets.hpp"
#include "epidemetric/electrical.hpp"

using namespace epidemetric;

TEST_CASE("laplacian") {
    Graph p2 = pathGraph(2);
    Eigen::MatrixXd l = laplacian(p2);
    CHECK(l(0, 0) == 1.0);
    CHECK(l(0, 1) == -1.0);
    CHECK(l(1, 1) == 1.0);

    Eigen::MatrixXd lk3 = laplacian(completeGraph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(lk3(i, j) == (i == j ? 2.0 : -1.0));
}

TEST_CASE("L = B^T W B") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = randomConnectedGraph(4 + seed % 9, 0.4, 4000 + seed, 0.5, 2.0);
        Eigen::MatrixXd b = incidence(g);
        Eigen::VectorXd w(g.numEdges());
        for (int e = 0; e < g.numEdges(); ++e) w(e) = g.edge(e).weight;
        Eigen::MatrixXd btwb = b.transpose() * w.asDiagonal() * b;
        CHECK((btwb - laplacian(g)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("incidence rows and orientation flip") {
    Graph p2 = pathGraph(2);
    Eigen::MatrixXd b = incidence(p2);
    CHECK(b(0, 0) == -1.0);  // tail = smaller id
    CHECK(b(0, 1) == 1.0);

    // flipping a row leaves B^T W B unchanged
    Graph g = randomConnectedGraph(6, 0.5, 42);
    Eigen::MatrixXd bi = incidence(g);
    Eigen::MatrixXd flipped = bi;
    flipped.row(0) *= -1.0;
    CHECK((bi.transpose() * bi - flipped.transpose() * flipped).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("induced subgraph adjacency equals M K M") {
    Graph g = randomConnectedGraph(9, 0.5, 123, 0.5, 2.0);
    int n = g.numVertices();
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) k(e.tail, e.head) = k(e.head, e.tail) = e.weight;
    std::vector<int> vs{0, 2, 3, 6, 8};
    Eigen::VectorXd ind = Eigen::VectorXd::Zero(n);
    for (int v : vs) ind(v) = 1.0;
    Eigen::MatrixXd mkm = ind.asDiagonal() * k * ind.asDiagonal();
    Subgraph s = induced(g, vs);
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (int e : s.edge_ids) {
        const Edge& ed = g.edge(e);
        adj(ed.tail, ed.head) = adj(ed.head, ed.tail) = ed.weight;
    }
    CHECK((adj - mkm).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spectral decomposition") {
    SpectralLaplacian p2(pathGraph(2));
    CHECK(p2.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p2.eigenvalues()(1) == doctest::Approx(2.0).epsilon(1e-12));

    for (int n = 3; n <= 6; ++n) {
        SpectralLaplacian kn(completeGraph(n));
        CHECK(std::abs(kn.eigenvalues()(0)) < 1e-10 * n);
        for (int i = 1; i < n; ++i) CHECK(kn.eigenvalues()(i) == doctest::Approx(static_cast<double>(n)).epsilon(1e-10));
    }

    // quadratic form identity on random vectors
    Graph g = randomConnectedGraph(8, 0.5, 5, 0.5, 2.0);
    Eigen::MatrixXd l = laplacian(g);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int rep = 0; rep < 10; ++rep) {
        Eigen::VectorXd v(8);
        for (int i = 0; i < 8; ++i) v(i) = u(rng);
        double quad = v.transpose() * l * v;
        double sum = 0;
        for (const Edge& e : g.edges()) sum += e.weight * (v(e.tail) - v(e.head)) * (v(e.tail) - v(e.head));
        CHECK(quad == doctest::Approx(sum).epsilon(1e-9));
    }

    // Green operator: GL = LG = projection off constants
    SpectralLaplacian sp(g);
    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(8, 8) - Eigen::MatrixXd::Constant(8, 8, 1.0 / 8);
    CHECK((sp.green() * l - proj).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((l * sp.green() - proj).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("effective resistance closed forms") {
    Graph p6 = pathGraph(6);
    SpectralLaplacian sp(p6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) CHECK(sp.effectiveResistance(i, j) == doctest::Approx(j - i).epsilon(1e-9));

    for (int n : {3, 8, 15}) {
        CHECK(effectiveResistance(completeGraph(n), 0, 1) == doctest::Approx(2.0 / n).epsilon(1e-9));
    }
    CHECK(effectiveResistance(completeGraph(3), 1, 2) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(effectiveResistance(completePendant(7), 0, 7) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(SpectralLaplacian(pathGraph(3)).effectiveResistance(1, 1) == 0.0);
}

TEST_CASE("three-way method agreement") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = randomConnectedGraph(4 + seed % 8, 0.5, 6000 + seed, 0.5, 2.0);
        SpectralLaplacian sp(g);
        for (int a = 0; a < g.numVertices(); ++a) {
            for (int b = a + 1; b < g.numVertices(); ++b) {
                double r1 = sp.effectiveResistance(a, b);
                double r2 = effectiveResistanceGrounded(g, a, b);
                CurrentSolution cur = unitCurrentFlow(g, sp, a, b);
                double r3 = flowEnergy(g, cur.current);
                CHECK(std::abs(r1 - r2) <= 1e-8 * r1);
                CHECK(std::abs(r1 - r3) <= 1e-8 * r1);
            }
        }
    }
}

TEST_CASE("unit current flow") {
    Graph p3 = pathGraph(3);
    CurrentSolution cur = unitCurrentFlow(p3, 0, 2);
    CHECK(cur.strength == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cur.current[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cur.current[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cur.potential(1) - cur.potential(0) == doctest::Approx(1.0).epsilon(1e-12));
    // sum-zero gauge
    CHECK(cur.potential.sum() == doctest::Approx(0.0).epsilon(1e-12));

    Graph k3 = completeGraph(3);
    CurrentSolution c3 = unitCurrentFlow(k3, 0, 1);
    CHECK(std::abs(c3.current[k3.edgeId(0, 1)]) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(std::abs(c3.current[k3.edgeId(0, 2)]) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(std::abs(c3.current[k3.edgeId(1, 2)]) == doctest::Approx(1.0 / 3).epsilon(1e-12));

    // K_N symmetry: constant potential off {a,b}, no current inside
    Graph k6 = completeGraph(6);
    CurrentSolution c6 = unitCurrentFlow(k6, 0, 1);
    for (int x = 3; x < 6; ++x) CHECK(c6.potential(x) == doctest::Approx(c6.potential(2)).epsilon(1e-12));
    for (int x = 2; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y) CHECK(std::abs(c6.current[k6.edgeId(x, y)]) < 1e-12);
}

TEST_CASE("Ohm and Kirchoff laws on random graphs") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = randomConnectedGraph(9, 0.4, 7000 + seed, 0.5, 2.0);
        SpectralLaplacian sp(g);
        CurrentSolution cur = unitCurrentFlow(g, sp, 0, 5);
        for (int e = 0; e < g.numEdges(); ++e) {
            const Edge& ed = g.edge(e);
            // i(tail->head) * R = v(head) - v(tail)
            CHECK(cur.current[e] / ed.weight == doctest::Approx(cur.potential(ed.head) - cur.potential(ed.tail)).epsilon(1e-9));
        }
        for (int x = 0; x < 9; ++x) {
            double expected = x == 0 ? 1.0 : (x == 5 ? -1.0 : 0.0);
            CHECK(cur.divergence(g, x) == doctest::Approx(expected).epsilon(1e-9));
        }
        // harmonicity of v off {a,b}
        for (int x = 0; x < 9; ++x) {
            if (x == 0 || x == 5) continue;
            double avg = 0, cx = 0;
            for (auto [y, e] : g.neighbors(x)) {
                avg += g.edge(e).weight * cur.potential(y);
                cx += g.edge(e).weight;
            }
            CHECK(cur.potential(x) == doctest::Approx(avg / cx).epsilon(1e-9));
        }
    }
}

TEST_CASE("energy and Thomson optimality") {
    Graph p3 = pathGraph(3);
    CurrentSolution cur = unitCurrentFlow(p3, 0, 2);
    CHECK(flowEnergy(p3, cur.current) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(flowEnergy(p3, std::vector<double>(2, 0.0)) == 0.0);

    // perturb the K3 unit current by a cycle: strictly larger energy
    Graph k3 = completeGraph(3);
    CurrentSolution c3 = unitCurrentFlow(k3, 0, 1);
    double base = flowEnergy(k3, c3.current);
    CHECK(base == doctest::Approx(2.0 / 3).epsilon(1e-12));
    for (double t : {0.1, -0.2, 0.5}) {
        std::vector<double> perturbed = c3.current;
        // add circulation t around 0 -> 1 -> 2 -> 0 (divergence-free)
        int e01 = k3.edgeId(0, 1), e12 = k3.edgeId(1, 2), e02 = k3.edgeId(0, 2);
        perturbed[e01] += (k3.edge(e01).tail == 0) ? t : -t;
        perturbed[e12] += (k3.edge(e12).tail == 1) ? t : -t;
        perturbed[e02] += (k3.edge(e02).tail == 2) ? t : -t;
        CHECK(flowEnergy(k3, perturbed) > base);
    }
}

TEST_CASE("cross-term identity") {
    // sum R(e) i(e) k(e) = (v(b)-v(a)) div_k(a) for random unit-ish flows k
    std::mt19937_64 rng(17);
    for (uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = randomConnectedGraph(8, 0.5, 8000 + seed, 0.5, 2.0);
        CurrentSolution cur = unitCurrentFlow(g, 0, 3);
        // k: a genuinely different a-b flow — the unit current of a randomly
        // reweighted copy of g, at random strength
        std::uniform_real_distribution<double> u(0.3, 3.0);
        std::vector<Edge> reweighted = g.edges();
        for (Edge& e : reweighted) e.weight = u(rng);
        Graph g2(g.numVertices(), std::move(reweighted));
        double s = u(rng);
        CurrentSolution other = unitCurrentFlow(g2, 0, 3);
        std::vector<double> k(g.numEdges());
        for (int e = 0; e < g.numEdges(); ++e) k[e] = s * other.current[e];
        double lhs = 0;
        for (int e = 0; e < g.numEdges(); ++e) lhs += cur.current[e] * k[e] / g.edge(e).weight;
        CurrentSolution kc = cur;
        kc.current = k;
        CHECK(kc.divergence(g, 0) == doctest::Approx(s).epsilon(1e-9));
        double rhs = (cur.potential(3) - cur.potential(0)) * kc.divergence(g, 0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("R_eff metric and domination") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        int n = 4 + static_cast<int>(seed % 9);
        Graph g = randomConnectedGraph(n, 0.4, 9000 + seed);
        PairMatrix r = effectiveResistanceMatrix(g);
        PairMatrix d = allPairsDistances(g);
        CHECK(r.isSymmetric(1e-12));
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                CHECK(r(a, b) > 0.0);
                CHECK(r(a, b) <= d(a, b) + 1e-9);
                for (int c = 0; c < n; ++c)
                    if (c != a && c != b) CHECK(r(a, b) <= r(a, c) + r(c, b) + 1e-8);
            }
        }
    }
    // tree equality
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph t = randomTree(8, 100 + seed);
        PairMatrix r = effectiveResistanceMatrix(t);
        PairMatrix d = allPairsDistances(t);
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b) CHECK(std::abs(r(a, b) - d(a, b)) < 1e-9);
    }
}

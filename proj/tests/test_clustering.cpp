#include <doctest.h>

#include <algorithm>
#include <random>

#include <json.hpp>

#include "epidemetric/clustering.hpp"
#include "epidemetric/epidemic.hpp"

using namespace epidemetric;

namespace {

PairMatrix tightPairs() {
    // points {0,1} and {2,3} tight, the pairs far apart
    PairMatrix d(4);
    d.set(0, 1, 1.0);
    d.set(2, 3, 2.0);
    d.set(0, 2, 10.0);
    d.set(0, 3, 12.0);
    d.set(1, 2, 11.0);
    d.set(1, 3, 13.0);
    return d;
}

}  // namespace

TEST_CASE("agnes forced merge order") {
    PairMatrix d(3);
    d.set(0, 1, 1.0);
    d.set(0, 2, 10.0);
    d.set(1, 2, 10.0);
    Dendrogram dend = agnes(d);
    REQUIRE(dend.merges.size() == 2);
    CHECK(dend.merges[0].left == 0);
    CHECK(dend.merges[0].right == 1);
    CHECK(dend.merges[0].height == 1.0);
    CHECK(dend.merges[1].height == 10.0);
}

TEST_CASE("agnes UPGMA averaging") {
    Dendrogram dend = agnes(tightPairs());
    REQUIRE(dend.merges.size() == 3);
    CHECK(dend.merges[0].height == 1.0);   // {0,1}
    CHECK(dend.merges[1].height == 2.0);   // {2,3}
    CHECK(dend.merges[2].height == doctest::Approx((10 + 12 + 11 + 13) / 4.0));
    Partition p = cut(dend, 2);
    CHECK(p.labels == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("agnes equal distances and validation") {
    PairMatrix d(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) d.set(i, j, 1.0);
    Dendrogram dend = agnes(d);
    for (const auto& m : dend.merges) CHECK(m.height == 1.0);
    // heights are non-decreasing (UPGMA monotonicity)
    for (size_t i = 1; i < dend.merges.size(); ++i) CHECK(dend.merges[i].height >= dend.merges[i - 1].height);

    PairMatrix bad(2);
    bad.set(0, 1, -1.0);
    CHECK_THROWS_AS(agnes(bad), GraphError);
    PairMatrix nan(2);
    nan.set(0, 1, std::nan(""));
    CHECK_THROWS_AS(agnes(nan), GraphError);
}

TEST_CASE("cut") {
    Dendrogram dend = agnes(tightPairs());
    CHECK(cut(dend, 1).labels == std::vector<int>{0, 0, 0, 0});
    CHECK(cut(dend, 4).labels == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(cut(dend, 0), GraphError);
    CHECK_THROWS_AS(cut(dend, 5), GraphError);

    // refinement: k+1 partition refines k partition
    for (int k = 1; k < 4; ++k) {
        Partition coarse = cut(dend, k);
        Partition fine = cut(dend, k + 1);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (fine.labels[i] == fine.labels[j]) CHECK(coarse.labels[i] == coarse.labels[j]);
    }
}

TEST_CASE("permutation equivariance") {
    PairMatrix d = tightPairs();
    std::vector<int> perm{2, 0, 3, 1};
    PairMatrix dp(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) dp.set(perm[i], perm[j], d(i, j));
    Partition p1 = cut(agnes(d), 2);
    Partition p2 = cut(agnes(dp), 2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK((p1.labels[i] == p1.labels[j]) == (p2.labels[perm[i]] == p2.labels[perm[j]]));
}

TEST_CASE("karate dataset") {
    Graph g = karateGraph();
    CHECK(g.numVertices() == 34);
    CHECK(g.numEdges() == 78);
    CHECK(g.degree(0) == 16.0);
    CHECK(g.degree(33) == 17.0);
    Partition ref = karateFactions();
    CHECK(ref.numClusters() == 2);
    CHECK(std::count(ref.labels.begin(), ref.labels.end(), 0) == 17);
}

TEST_CASE("mislabel count") {
    Partition a{{0, 0, 1, 1}};
    CHECK(mislabelCount(a, a) == 0);
    Partition b{{0, 1, 1, 1}};
    CHECK(mislabelCount(a, b) == 1);
    Partition flipped{{1, 1, 0, 0}};
    CHECK(mislabelCount(a, flipped) == 0);
    Partition three{{0, 1, 2, 0}};
    CHECK_THROWS_AS(mislabelCount(a, three), GraphError);
}

TEST_CASE("karate pipeline determinism and quality") {
    Graph g = karateGraph();
    PairMatrix epi = epidemicMatrix(g);
    Partition p1 = cut(agnes(epi), 2);
    Partition p2 = cut(agnes(epidemicMatrix(g)), 2);
    CHECK(p1.labels == p2.labels);
    int mis = mislabelCount(p1, karateFactions());
    CHECK(mis <= 4);
}

TEST_CASE("dendrogram exports") {
    Dendrogram dend = agnes(tightPairs());
    auto j = nlohmann::json::parse(dend.toJson());
    CHECK(j["n_leaves"] == 4);
    CHECK(j["merges"].size() == 3);
    CHECK(j["merges"][0]["height"] == 1.0);

    std::string newick = dend.toNewick();
    CHECK(newick.back() == ';');
    for (int v = 1; v <= 4; ++v) CHECK(newick.find("v" + std::to_string(v)) != std::string::npos);
}

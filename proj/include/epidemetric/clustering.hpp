#ifndef EPIDEMETRIC_CLUSTERING_HPP
#define EPIDEMETRIC_CLUSTERING_HPP

#include <string>
#include <vector>

#include "epidemetric/graph.hpp"

namespace epidemetric {

/// Binary merge tree from average-linkage agglomeration. Leaf ids are
/// 0..N-1, internal ids N..2N-2 in merge order.
struct Dendrogram {
    struct Merge {
        int left;
        int right;
        double height;
        int id;
    };
    int n_leaves;
    std::vector<Merge> merges;  // exactly N-1

    std::string toJson() const;
    std::string toNewick() const;
};

/// k-way partition as labels 0..k-1 per vertex.
struct Partition {
    std::vector<int> labels;

    int numClusters() const;
};

// Average linkage (UPGMA): repeatedly merge the cluster pair with least mean
// pairwise dissimilarity. Ties break on the lexicographically smallest
// (min cluster id, max cluster id) pair.
Dendrogram agnes(const PairMatrix& dissimilarity);

// Undo the last k-1 merges; clusters are labeled 0..k-1 in order of their
// smallest member vertex.
Partition cut(const Dendrogram& dend, int k);

// The Zachary Karate Club graph (34 vertices, 78 edges) with the published
// two-faction split (leaders are vertices 1 and 34, 1-based).
Graph karateGraph();
Partition karateFactions();

// Minimum disagreements between two 2-way partitions over the label swap.
int mislabelCount(const Partition& p, const Partition& reference);

}  // namespace epidemetric

#endif

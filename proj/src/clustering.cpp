#include "epidemetric/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <json.hpp>

namespace epidemetric {

int Partition::numClusters() const {
    std::set<int> ls(labels.begin(), labels.end());
    return static_cast<int>(ls.size());
}

std::string Dendrogram::toJson() const {
    nlohmann::json j;
    j["n_leaves"] = n_leaves;
    j["merges"] = nlohmann::json::array();
    for (const Merge& m : merges) j["merges"].push_back({{"left", m.left}, {"right", m.right}, {"height", m.height}, {"id", m.id}});
    return j.dump(2);
}

std::string Dendrogram::toNewick() const {
    // node heights: leaves at 0, internal at merge height
    std::vector<double> height(2 * n_leaves - 1, 0.0);
    for (const Merge& m : merges) height[m.id] = m.height;
    std::vector<const Merge*> by_id(2 * n_leaves - 1, nullptr);
    for (const Merge& m : merges) by_id[m.id] = &m;
    auto render = [&](auto&& self, int id, double parent_height) -> std::string {
        double branch = parent_height - height[id];
        if (id < n_leaves) return "v" + std::to_string(id + 1) + ":" + std::to_string(branch);
        const Merge* m = by_id[id];
        return "(" + self(self, m->left, height[id]) + "," + self(self, m->right, height[id]) + "):" + std::to_string(branch);
    };
    if (merges.empty()) return "v1;";
    int root = merges.back().id;
    const Merge* m = by_id[root];
    return "(" + render(render, m->left, height[root]) + "," + render(render, m->right, height[root]) + ");";
}

Dendrogram agnes(const PairMatrix& d) {
    int n = d.size();
    if (n < 1) throw GraphError("empty dissimilarity matrix");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = d(i, j);
            if (std::isnan(v) || v < 0.0) throw GraphError("dissimilarity entries must be finite and non-negative");
            if (i == j && v != 0.0) throw GraphError("dissimilarity diagonal must be zero");
            if (d(i, j) != d(j, i)) throw GraphError("dissimilarity matrix must be symmetric");
        }
    }
    Dendrogram dend;
    dend.n_leaves = n;
    int total = 2 * n - 1;
    // dense dissimilarity over cluster ids; only active ids are consulted
    std::vector<std::vector<double>> dist(total, std::vector<double>(total, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dist[i][j] = d(i, j);
    std::vector<int> size(total, 0);
    std::vector<int> active;
    for (int i = 0; i < n; ++i) {
        size[i] = 1;
        active.push_back(i);
    }
    for (int step = 0; step < n - 1; ++step) {
        int bi = -1, bj = -1;
        double best = std::numeric_limits<double>::infinity();
        for (size_t p = 0; p < active.size(); ++p) {
            for (size_t q = p + 1; q < active.size(); ++q) {
                int i = active[p], j = active[q];
                double v = dist[i][j];
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
                // ties: active ids are kept sorted, so the first (min-id,
                // second-id) pair encountered wins
            }
        }
        int id = n + step;
        dend.merges.push_back({bi, bj, best, id});
        // Lance-Williams average-linkage update
        for (int c : active) {
            if (c == bi || c == bj) continue;
            double v = (size[bi] * dist[bi][c] + size[bj] * dist[bj][c]) / (size[bi] + size[bj]);
            dist[id][c] = dist[c][id] = v;
        }
        size[id] = size[bi] + size[bj];
        active.erase(std::remove_if(active.begin(), active.end(), [&](int c) { return c == bi || c == bj; }), active.end());
        active.push_back(id);
    }
    return dend;
}

Partition cut(const Dendrogram& dend, int k) {
    int n = dend.n_leaves;
    if (k < 1 || k > n) throw GraphError("cut: k out of range");
    int total = 2 * n - 1;
    std::vector<int> parent(total, -1);
    for (int step = 0; step < n - k; ++step) {
        const auto& m = dend.merges[step];
        parent[m.left] = m.id;
        parent[m.right] = m.id;
    }
    auto root = [&](int x) {
        while (parent[x] >= 0) x = parent[x];
        return x;
    };
    // label clusters 0..k-1 in order of smallest member vertex
    std::map<int, int> label_of_root;
    Partition part;
    part.labels.resize(n);
    for (int v = 0; v < n; ++v) {
        int r = root(v);
        auto it = label_of_root.find(r);
        if (it == label_of_root.end()) it = label_of_root.insert({r, static_cast<int>(label_of_root.size())}).first;
        part.labels[v] = it->second;
    }
    return part;
}

Graph karateGraph() {
    // Zachary (1977) friendship network, 1-based pairs
    static const int pairs[][2] = {
        {1, 2},   {1, 3},   {1, 4},   {1, 5},   {1, 6},   {1, 7},   {1, 8},   {1, 9},   {1, 11},  {1, 12},
        {1, 13},  {1, 14},  {1, 18},  {1, 20},  {1, 22},  {1, 32},  {2, 3},   {2, 4},   {2, 8},   {2, 14},
        {2, 18},  {2, 20},  {2, 22},  {2, 31},  {3, 4},   {3, 8},   {3, 9},   {3, 10},  {3, 14},  {3, 28},
        {3, 29},  {3, 33},  {4, 8},   {4, 13},  {4, 14},  {5, 7},   {5, 11},  {6, 7},   {6, 11},  {6, 17},
        {7, 17},  {9, 31},  {9, 33},  {9, 34},  {10, 34}, {14, 34}, {15, 33}, {15, 34}, {16, 33}, {16, 34},
        {19, 33}, {19, 34}, {20, 34}, {21, 33}, {21, 34}, {23, 33}, {23, 34}, {24, 26}, {24, 28}, {24, 30},
        {24, 33}, {24, 34}, {25, 26}, {25, 28}, {25, 32}, {26, 32}, {27, 30}, {27, 34}, {28, 34}, {29, 32},
        {29, 34}, {30, 33}, {30, 34}, {31, 33}, {31, 34}, {32, 33}, {32, 34}, {33, 34}};
    std::vector<Edge> edges;
    for (const auto& p : pairs) edges.push_back({p[0] - 1, p[1] - 1, 1.0});
    return Graph(34, std::move(edges));
}

Partition karateFactions() {
    // faction of the instructor (vertex 1) = 0, of vertex 34 = 1
    static const int instructor[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22};
    Partition p;
    p.labels.assign(34, 1);
    for (int v : instructor) p.labels[v - 1] = 0;
    return p;
}

int mislabelCount(const Partition& p, const Partition& reference) {
    if (p.labels.size() != reference.labels.size()) throw GraphError("partition size mismatch");
    if (p.numClusters() > 2 || reference.numClusters() > 2) throw GraphError("mislabel count is defined for 2-way partitions");
    int direct = 0, swapped = 0;
    for (size_t v = 0; v < p.labels.size(); ++v) {
        if (p.labels[v] != reference.labels[v]) ++direct;
        if ((1 - p.labels[v]) != reference.labels[v]) ++swapped;
    }
    return std::min(direct, swapped);
}

}  // namespace epidemetric

#include "epidemetric/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace epidemetric {

std::string formatDouble(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string pairMatrixToCsv(const PairMatrix& m, int digits) {
    std::ostringstream os;
    int n = m.size();
    os << "vertex";
    for (int j = 0; j < n; ++j) os << ',' << (j + 1);
    os << '\n';
    for (int i = 0; i < n; ++i) {
        os << (i + 1);
        for (int j = 0; j < n; ++j) os << ',' << formatDouble(m(i, j), digits);
        os << '\n';
    }
    return os.str();
}

PairMatrix pairMatrixFromCsv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        bool first = true;
        while (std::getline(ls, cell, ',')) {
            if (first) {
                first = false;  // row label
                continue;
            }
            row.push_back(std::stod(cell));
        }
        rows.push_back(std::move(row));
    }
    int n = static_cast<int>(rows.size());
    PairMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw GraphError("pair matrix CSV is not square");
        for (int j = 0; j < n; ++j)
            if (j >= i) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::string partitionToCsv(const Partition& p) {
    std::ostringstream os;
    os << "vertex,label\n";
    for (size_t v = 0; v < p.labels.size(); ++v) os << (v + 1) << ',' << p.labels[v] << '\n';
    return os.str();
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write '" + path + "'");
    out << content;
}

Graph loadGraph(const std::string& path) {
    std::string text = readFile(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return Graph::fromAdjacencyCsv(text);
    return Graph::fromEdgeList(text);
}

}  // namespace epidemetric

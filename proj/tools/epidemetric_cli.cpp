// epidemetric: graph metrics, electrical quantities, modulus verification,
// random-walk simulation, and epidemic-dissimilarity clustering.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <json.hpp>

#include "epidemetric/clustering.hpp"
#include "epidemetric/datasets.hpp"
#include "epidemetric/electrical.hpp"
#include "epidemetric/epidemic.hpp"
#include "epidemetric/io.hpp"
#include "epidemetric/randomwalk.hpp"
#include "epidemetric/variational.hpp"
#include "epidemetric/verify.hpp"

namespace fs = std::filesystem;
using namespace epidemetric;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct GraphSource {
    std::string input;    // file path
    std::string dataset;  // built-in name

    Graph load() const {
        if (!dataset.empty()) return builtinDataset(dataset);
        if (!input.empty()) return loadGraph(input);
        throw GraphError("provide --input PATH or --dataset NAME");
    }
};

void addSourceFlags(CLI::App* cmd, GraphSource& src) {
    auto* in = cmd->add_option("--input", src.input, "edge-list (or .csv adjacency) file");
    auto* ds = cmd->add_option("--dataset", src.dataset, "built-in dataset: karate, path:N, star:N, complete:N, complete-pendant:N");
    in->excludes(ds);
}

void ensureOutDir(const std::string& out) {
    if (!out.empty()) fs::create_directories(out);
}

std::string outPath(const std::string& dir, const std::string& name) {
    return (fs::path(dir.empty() ? "." : dir) / name).string();
}

nlohmann::json pairMatrixToJson(const PairMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("EPIDEMETRIC_THREADS")) {
        int t = std::atoi(threads);
        if (t > 0) Eigen::setNbThreads(t);
    }
    CLI::App app{"epidemic quasimetric, effective resistance, modulus, and clustering on finite graphs"};
    app.require_subcommand(1);

    GraphSource src;
    std::string out_dir;
    int digits = 17;
    int k_clusters = 2;
    int vertex_a = 1, vertex_b = 2;
    long trials = 100000;
    uint64_t seed = 0;
    int random_n = 0, random_count = 0;
    std::string format = "csv";

    auto* metrics = app.add_subcommand("metrics", "write distances, epidemic, effective resistance, and discrepancy tables");
    addSourceFlags(metrics, src);
    metrics->add_option("--out", out_dir, "output directory");
    metrics->add_option("--digits", digits, "significant digits for numeric output")->check(CLI::Range(1, 17));
    metrics->add_option("--format", format, "csv (one file per table) or json (single metrics.json)")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* epi_cmd = app.add_subcommand("epidemic", "epidemic quasimetric for one pair");
    addSourceFlags(epi_cmd, src);
    epi_cmd->add_option("-a", vertex_a, "first vertex (1-based)")->required();
    epi_cmd->add_option("-b", vertex_b, "second vertex (1-based)")->required();

    auto* effres_cmd = app.add_subcommand("effres", "effective resistance for one pair");
    addSourceFlags(effres_cmd, src);
    effres_cmd->add_option("-a", vertex_a, "first vertex (1-based)")->required();
    effres_cmd->add_option("-b", vertex_b, "second vertex (1-based)")->required();
    effres_cmd->add_option("--digits", digits, "significant digits")->check(CLI::Range(1, 17));

    auto* modulus_cmd = app.add_subcommand("modulus", "modulus of the a-b curve family");
    addSourceFlags(modulus_cmd, src);
    modulus_cmd->add_option("-a", vertex_a, "first vertex (1-based)")->required();
    modulus_cmd->add_option("-b", vertex_b, "second vertex (1-based)")->required();
    modulus_cmd->add_option("--digits", digits, "significant digits")->check(CLI::Range(1, 17));

    auto* cluster_cmd = app.add_subcommand("cluster", "average-linkage clustering on the epidemic dissimilarity");
    addSourceFlags(cluster_cmd, src);
    cluster_cmd->add_option("--k", k_clusters, "number of clusters")->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--out", out_dir, "output directory");

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo escape probability and Green's function vs exact values");
    addSourceFlags(simulate_cmd, src);
    simulate_cmd->add_option("-a", vertex_a, "source vertex (1-based)")->required();
    simulate_cmd->add_option("-b", vertex_b, "target vertex (1-based)")->required();
    simulate_cmd->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", seed, "RNG seed");

    auto* verify_cmd = app.add_subcommand("verify", "run the identity/inequality suites; exit 0 iff all pass");
    addSourceFlags(verify_cmd, src);
    verify_cmd->add_option("--random", random_n, "verify on random connected graphs of this size");
    verify_cmd->add_option("--count", random_count, "number of random graphs")->default_val(10);
    verify_cmd->add_option("--seed", seed, "random graph seed");
    verify_cmd->add_option("--out", out_dir, "directory for report.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*metrics) {
            Graph g = src.load();
            ensureOutDir(out_dir);
            PairMatrix dist = allPairsDistances(g);
            PairMatrix epi = epidemicMatrix(g);
            PairMatrix reff = effectiveResistanceMatrix(g);
            PairMatrix delta = discrepancyMatrix(reff, epi, dist);
            if (format == "json") {
                nlohmann::json j{{"distances", pairMatrixToJson(dist)},
                                 {"epidemic", pairMatrixToJson(epi)},
                                 {"effres", pairMatrixToJson(reff)},
                                 {"discrepancy", pairMatrixToJson(delta)}};
                writeFile(outPath(out_dir, "metrics.json"), j.dump(2) + "\n");
                std::cout << "wrote metrics.json\n";
            } else {
                writeFile(outPath(out_dir, "distances.csv"), pairMatrixToCsv(dist, digits));
                writeFile(outPath(out_dir, "epidemic.csv"), pairMatrixToCsv(epi, digits));
                writeFile(outPath(out_dir, "effres.csv"), pairMatrixToCsv(reff, digits));
                writeFile(outPath(out_dir, "discrepancy.csv"), pairMatrixToCsv(delta, digits));
                std::cout << "wrote distances.csv epidemic.csv effres.csv discrepancy.csv\n";
            }
        } else if (*epi_cmd) {
            Graph g = src.load();
            EpidemicResult r = epidemic(g, vertex_a - 1, vertex_b - 1);
            nlohmann::json j{{"a", vertex_a},       {"b", vertex_b},       {"distance", r.distance},
                             {"vol_a", r.vol_a},    {"vol_b", r.vol_b},    {"epidemic", r.value},
                             {"union_size", r.union_size}};
            std::cout << j.dump(2) << '\n';
        } else if (*effres_cmd) {
            Graph g = src.load();
            std::cout << formatDouble(effectiveResistance(g, vertex_a - 1, vertex_b - 1), digits) << '\n';
        } else if (*modulus_cmd) {
            Graph g = src.load();
            std::cout << formatDouble(modulus(g, vertex_a - 1, vertex_b - 1), digits) << '\n';
        } else if (*cluster_cmd) {
            Graph g = src.load();
            ensureOutDir(out_dir);
            Dendrogram dend = agnes(epidemicMatrix(g));
            Partition part = cut(dend, k_clusters);
            writeFile(outPath(out_dir, "dendrogram.json"), dend.toJson());
            writeFile(outPath(out_dir, "dendrogram.newick"), dend.toNewick() + "\n");
            writeFile(outPath(out_dir, "partition.csv"), partitionToCsv(part));
            std::cout << "wrote dendrogram.json dendrogram.newick partition.csv\n";
            if (src.dataset == "karate" && k_clusters == 2) {
                int mis = mislabelCount(part, karateFactions());
                writeFile(outPath(out_dir, "mislabels.txt"), std::to_string(mis) + "\n");
                std::cout << "mislabels vs reference factions: " << mis << '\n';
            }
        } else if (*simulate_cmd) {
            Graph g = src.load();
            int a = vertex_a - 1, b = vertex_b - 1;
            WalkConfig cfg{seed, trials, 0};
            double reff = effectiveResistance(g, a, b);
            double ca = g.degree(a);
            double exact_escape = 1.0 / (reff * ca);
            double exact_green = ca * reff;
            McEstimate esc = escapeProbabilityMc(g, a, b, cfg);
            McEstimate grn = greenFunctionMc(g, a, b, cfg);
            double z_esc = (esc.estimate - exact_escape) / esc.stderror;
            double z_grn = (grn.estimate - exact_green) / grn.stderror;
            nlohmann::json j{{"escape", {{"estimate", esc.estimate}, {"stderr", esc.stderror}, {"exact", exact_escape}, {"z", z_esc}, {"aborted", esc.aborted}}},
                             {"green", {{"estimate", grn.estimate}, {"stderr", grn.stderror}, {"exact", exact_green}, {"z", z_grn}, {"aborted", grn.aborted}}}};
            std::cout << j.dump(2) << '\n';
            if (std::abs(z_esc) > 4.0 || std::abs(z_grn) > 4.0) return kExitVerifyFailure;
        } else if (*verify_cmd) {
            std::vector<Graph> graphs;
            if (random_n > 0) {
                for (int i = 0; i < random_count; ++i)
                    graphs.push_back(randomConnectedGraph(random_n, 0.4, seed + static_cast<uint64_t>(i)));
            } else {
                graphs.push_back(src.load());
            }
            VerifyReport report = runVerification(graphs);
            std::string json = report.toJson();
            if (!out_dir.empty()) {
                ensureOutDir(out_dir);
                writeFile(outPath(out_dir, "report.json"), json);
            }
            std::cout << json << '\n';
            if (!report.allPass()) return kExitVerifyFailure;
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}

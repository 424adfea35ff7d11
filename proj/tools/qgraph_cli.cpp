#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qgraph/experiments.hpp"
#include "qgraph/graph.hpp"

namespace {

int write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    out << contents;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"query-counting simulator for parameterized graph search algorithms"};
    app.require_subcommand(1);

    std::string graph_path, model = "matrix", family, out_path;
    int k = 0, t = 3, n = 0, trials = 0, edges = -1, extra = 2;
    uint64_t seed = 0;
    std::string n_range, k_range;
    if (const char* env = std::getenv("QGRAPH_SEED")) seed = std::strtoull(env, nullptr, 10);

    auto* solve = app.add_subcommand("solve", "solve one instance and print the ledger");
    std::string problem;
    solve->add_option("problem", problem, "vc | matching | maxmatching")->required();
    solve->add_option("graph", graph_path, "graph file (text format)")->required();
    solve->add_option("--k", k, "parameter k");
    solve->add_option("--seed", seed, "rng seed");
    solve->add_option("--model", model, "matrix | list");

    auto* sweep = app.add_subcommand("sweep", "trial grid, one CSV row per (n,k,trial)");
    std::string sweep_problem, sweep_family;
    sweep->add_option("problem", sweep_problem, "vc | matching | maxmatching")->required();
    sweep->add_option("--family", sweep_family, "random | disjoint-edges | cliques")->required();
    sweep->add_option("--n", n_range, "n range lo[:hi[:step]]")->required();
    sweep->add_option("--k", k_range, "k range lo[:hi[:step]]")->required();
    sweep->add_option("--trials", trials, "trials per cell")->required();
    sweep->add_option("--seed", seed, "rng seed");
    sweep->add_option("--edges", edges, "edge count for family random");
    sweep->add_option("--extra", extra, "disjoint-edges: j = k + extra");
    sweep->add_option("--t", t, "clique size for family cliques");
    sweep->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* lower = app.add_subcommand("lowerbound", "adversary quantities of one instance family");
    std::string lb_family;
    lower->add_option("family", lb_family, "vc-matchings | km-matchings | cliques | cycles")
        ->required();
    lower->add_option("--n", n, "vertex count")->required();
    lower->add_option("--k", k, "parameter k")->required();
    lower->add_option("--t", t, "clique size (family cliques)");
    lower->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* kernel = app.add_subcommand("kernel", "write the quantum kernelization of an instance");
    kernel->add_option("graph", graph_path, "graph file (text format)")->required();
    kernel->add_option("--k", k, "parameter k")->required();
    kernel->add_option("--seed", seed, "rng seed");
    kernel->add_option("--out", out_path, "kernel file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) {
            const qgraph::Graph g = qgraph::Graph::from_file(graph_path);
            const auto outcome = qgraph::solve_instance(problem, g, k, seed, model);
            std::cout << outcome.report;
            return outcome.exit_code;
        }
        if (*sweep) {
            qgraph::SweepConfig config;
            config.problem = sweep_problem;
            config.family = sweep_family;
            config.n_values = qgraph::parse_range(n_range);
            config.k_values = qgraph::parse_range(k_range);
            config.trials = trials;
            config.seed = seed;
            config.random_edges = edges;
            config.disjoint_extra = extra;
            config.clique_size = t;
            const std::string csv = qgraph::sweep_csv(config);
            if (out_path.empty()) {
                std::cout << csv;
                return 0;
            }
            return write_file(out_path, csv);
        }
        if (*lower) {
            const std::string csv = qgraph::lowerbound_csv(lb_family, n, k, t);
            if (out_path.empty()) {
                std::cout << csv;
                return 0;
            }
            return write_file(out_path, csv);
        }
        if (*kernel) {
            const qgraph::Graph g = qgraph::Graph::from_file(graph_path);
            const auto outcome = qgraph::kernel_instance(g, k, seed);
            std::cout << outcome.report;
            if (!out_path.empty()) {
                const int rc = write_file(out_path, outcome.file_contents);
                if (rc != 0) return rc;
            }
            return outcome.exit_code;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

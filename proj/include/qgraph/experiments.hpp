#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// Command cores shared by the CLI and the test suites. Every function here is
// a pure function of its arguments (all randomness flows through derived
// streams of the given seed), so repeated invocations are byte-identical.

inline constexpr const char* kCsvSchemaVersion = "1";

struct SolveOutcome {
    int exit_code = 2;  // 0 yes, 1 no, 2 usage/input error
    std::string report;
};

// problem: vc | matching | maxmatching; model: matrix | list.
SolveOutcome solve_instance(const std::string& problem, const Graph& g, int k, uint64_t seed,
                            const std::string& model);

struct SweepConfig {
    std::string problem;           // vc | matching | maxmatching
    std::string family;            // random | disjoint-edges | cliques
    std::vector<int> n_values;     // ordered
    std::vector<int> k_values;     // ordered
    int trials = 0;
    uint64_t seed = 0;
    // family parameters
    int random_edges = -1;         // family random: exact edge count (required)
    int disjoint_extra = 2;        // family disjoint-edges: j = k + extra
    int clique_size = 3;           // family cliques: t
    // brute-force agreement is computed only up to this size
    int oracle_limit = 24;
};

// One CSV row per (n, k, trial), ordered; header always present.
std::string sweep_csv(const SweepConfig& config);

// Header plus one row of adversary quantities; throws on infeasible sizes.
std::string lowerbound_csv(const std::string& family, int n, int k, int t);

struct KernelOutcome {
    int exit_code = 0;
    std::string file_contents;  // kernel serialization or the NO-INSTANCE marker
    std::string report;
};

KernelOutcome kernel_instance(const Graph& g, int k, uint64_t seed);

// Range parser for "lo", "lo:hi" or "lo:hi:step" (inclusive).
std::vector<int> parse_range(const std::string& text);

}  // namespace qgraph

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

#include "qgraph/graph.hpp"
#include "qgraph/oracle.hpp"

namespace qgraph {

inline constexpr const char* kDtreeClassicalLabel = "dtree.classical";
inline constexpr const char* kDtreeModeledLabel = "dtree.modeled";

// Guessing-scheme statistics of one classical decision-tree execution: the
// path length actually taken, the number of outcomes that contradicted the
// guess, and the tree-level bounds T and I that feed the modeled quantum cost.
struct GuessStats {
    uint64_t queries_used = 0;
    uint64_t mistakes = 0;
    uint64_t depth_bound = 0;    // T
    uint64_t mistake_bound = 0;  // I
};

// ceil(c * sqrt(T * I)); the cost model of the guessing-tree theorem. This is
// a MODEL, not a simulation: it is never mixed into the simulated categories.
uint64_t modeled_quantum_cost(uint64_t depth_bound, uint64_t mistake_bound, double c = 1.0);

// Greedy maximal matching over vertex pairs in canonical order, skipping
// matched endpoints; the scheme guesses "no edge", so every positive answer is
// a mistake. Classical queries land under dtree.classical; the modeled cost is
// recorded under modeled_label. Bounds: T = n(n-1)/2, I = |returned matching|.
std::pair<Matching, GuessStats> run_classical_maximal_matching(
    MatrixOracle& oracle, std::string_view modeled_label = kDtreeModeledLabel, double c = 1.0);

// List-model scan: rows of matched vertices are skipped, a row stops when its
// owner becomes matched or at the null symbol, and the scan stops globally at
// |M| = k+1; this keeps queries_used <= m + n on every input. A mistake is a
// revealed free neighbor (everything else falls in the guessed group).
// Bounds: T = m + n, I = k + 1.
std::pair<Matching, GuessStats> run_list_scan_matching(
    ListOracle& oracle, int k, std::string_view modeled_label = kDtreeModeledLabel,
    double c = 1.0);

}  // namespace qgraph

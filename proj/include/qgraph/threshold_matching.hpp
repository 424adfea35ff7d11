#pragma once

#include <cstdint>

#include "qgraph/grover.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/oracle.hpp"
#include "qgraph/rng.hpp"

namespace qgraph {

inline constexpr const char* kThresholdLabel = "alg1.grover";
inline constexpr const char* kUnbudgetedLabel = "alg2.grover";

struct ThresholdOptions {
    double budget_multiplier = 96.0;
    // Alternative accounting: also count the per-round classical verification
    // queries against the iteration budget.
    bool charge_verification_to_budget = false;
};

// Grover-iteration budget of the threshold search: ceil(multiplier * n * sqrt(k+1)).
uint64_t threshold_budget(int n, int k, double multiplier = 96.0);

// Repeated Las-Vegas search for an edge with both endpoints unmatched, stopped
// once |M| = k+1 or the budget under kThresholdLabel is exhausted. The output
// is always a matching; with probability >= 5/6 it is maximal or of size k+1.
Matching quantum_threshold_maximal_matching(MatrixOracle& oracle, int k, Rng& rng,
                                            const ThresholdOptions& opts = {});

struct UnbudgetedRun {
    Matching matching;
    uint64_t iterations = 0;  // Grover iterations consumed until the stop condition held
};

// The same loop without the query limit; the stop condition (|M| = k+1 or M
// maximal) is detected from the hidden graph for instrumentation only.
UnbudgetedRun threshold_matching_unbudgeted(MatrixOracle& oracle, int k, Rng& rng);

// Search space over all unordered vertex pairs whose predicate is "both
// endpoints unmatched and the pair is an edge"; one matrix query per
// evaluation, endpoint membership is free bookkeeping.
SearchSpace free_pair_edge_space(MatrixOracle& oracle, const std::vector<char>& matched,
                                 QueryLedger::LabelId label);

}  // namespace qgraph

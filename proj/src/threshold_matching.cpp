#include "qgraph/threshold_matching.hpp"

#include <cmath>
#include <stdexcept>

namespace qgraph {

uint64_t threshold_budget(int n, int k, double multiplier) {
    return static_cast<uint64_t>(std::ceil(multiplier * n * std::sqrt(k + 1.0)));
}

SearchSpace free_pair_edge_space(MatrixOracle& oracle, const std::vector<char>& matched,
                                 QueryLedger::LabelId label) {
    const int n = oracle.vertex_count();
    const Graph* g = &oracle.hidden_graph();
    auto truth = [g, &matched, n](uint64_t r) {
        const auto [u, v] = pair_unrank(n, r);
        return !matched[u] && !matched[v] && g->has_edge(u, v);
    };
    auto charged = [&oracle, &matched, label, n](uint64_t r) {
        const auto [u, v] = pair_unrank(n, r);
        const bool edge = oracle.query_pair(u, v, label);
        return !matched[u] && !matched[v] && edge;
    };
    return SearchSpace(pair_count(n), truth, charged, &oracle.ledger(), label);
}

Matching quantum_threshold_maximal_matching(MatrixOracle& oracle, int k, Rng& rng,
                                            const ThresholdOptions& opts) {
    if (k < 0) throw std::invalid_argument("threshold matching: k < 0");
    const int n = oracle.vertex_count();
    QueryLedger& ledger = oracle.ledger();
    const auto label = ledger.label(kThresholdLabel);
    const uint64_t budget = threshold_budget(n, k, opts.budget_multiplier);
    ledger.set_grover_budget(label, budget);

    std::vector<char> matched(n, 0);
    Matching m;
    auto used = [&] {
        return ledger.grover(label) +
               (opts.charge_verification_to_budget ? ledger.classical(label) : 0);
    };
    while (m.size() < k + 1 && used() < budget) {
        SearchSpace space = free_pair_edge_space(oracle, matched, label);
        LasVegasOptions lv;
        lv.iteration_cap = budget - used();
        lv.cap_includes_verification = opts.charge_verification_to_budget;
        const GroverOutcome out = grover_lasvegas(space, rng, lv);
        if (!out.found) break;  // cap hit, or the space was degenerate (N <= 1)
        const auto [u, v] = pair_unrank(n, *out.found);
        m.add({u, v});
        matched[u] = matched[v] = 1;
    }
    return m;
}

UnbudgetedRun threshold_matching_unbudgeted(MatrixOracle& oracle, int k, Rng& rng) {
    if (k < 0) throw std::invalid_argument("threshold matching: k < 0");
    const int n = oracle.vertex_count();
    const Graph& g = oracle.hidden_graph();
    QueryLedger& ledger = oracle.ledger();
    const auto label = ledger.label(kUnbudgetedLabel);

    std::vector<char> matched(n, 0);
    Matching m;
    uint64_t iterations = 0;
    auto stop_condition_holds = [&] {  // instrumentation read, never charged
        if (m.size() == k + 1) return true;
        for (const auto& [u, v] : g.edges())
            if (!matched[u] && !matched[v]) return false;
        return true;
    };
    while (!stop_condition_holds()) {
        SearchSpace space = free_pair_edge_space(oracle, matched, label);
        const GroverOutcome out = grover_lasvegas(space, rng);  // K >= 1 here, halts a.s.
        iterations += out.iterations_used;
        const auto [u, v] = pair_unrank(n, *out.found);
        m.add({u, v});
        matched[u] = matched[v] = 1;
    }
    return {m, iterations};
}

}  // namespace qgraph

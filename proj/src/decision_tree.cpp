#include "qgraph/decision_tree.hpp"

#include <cmath>
#include <stdexcept>

namespace qgraph {

uint64_t modeled_quantum_cost(uint64_t depth_bound, uint64_t mistake_bound, double c) {
    const double product = static_cast<double>(depth_bound) * static_cast<double>(mistake_bound);
    return static_cast<uint64_t>(std::ceil(c * std::sqrt(product)));
}

std::pair<Matching, GuessStats> run_classical_maximal_matching(MatrixOracle& oracle,
                                                               std::string_view modeled_label,
                                                               double c) {
    const int n = oracle.vertex_count();
    QueryLedger& ledger = oracle.ledger();
    const auto label = ledger.label(kDtreeClassicalLabel);
    std::vector<char> matched(n, 0);
    Matching m;
    GuessStats stats;
    for (int v = 0; v < n; ++v) {
        for (int u = v + 1; u < n; ++u) {
            if (matched[v] || matched[u]) continue;
            ++stats.queries_used;
            if (oracle.query_pair(v, u, label)) {
                ++stats.mistakes;  // the scheme always guesses "no edge"
                m.add({v, u});
                matched[v] = matched[u] = 1;
            }
        }
    }
    stats.depth_bound = pair_count(n);
    stats.mistake_bound = static_cast<uint64_t>(m.size());
    ledger.charge_modeled(ledger.label(modeled_label),
                          modeled_quantum_cost(stats.depth_bound, stats.mistake_bound, c));
    return {std::move(m), stats};
}

std::pair<Matching, GuessStats> run_list_scan_matching(ListOracle& oracle, int k,
                                                       std::string_view modeled_label,
                                                       double c) {
    if (k < 0) throw std::invalid_argument("run_list_scan_matching: k < 0");
    const int n = oracle.vertex_count();
    QueryLedger& ledger = oracle.ledger();
    const auto label = ledger.label(kDtreeClassicalLabel);
    std::vector<char> matched(n, 0);
    Matching m;
    GuessStats stats;
    for (int v = 0; v < n && m.size() < k + 1; ++v) {
        if (matched[v]) continue;  // row skipped entirely
        for (int i = 1; i <= n - 1; ++i) {
            ++stats.queries_used;
            const auto w = oracle.query_list(v, i, label);
            if (!w) break;               // null: within the guessed group
            if (matched[*w]) continue;   // already-matched neighbor: guessed group
            ++stats.mistakes;            // a free neighbor contradicts the guess
            m.add({v, *w});
            matched[v] = matched[*w] = 1;
            break;                       // row stops once its owner is matched
        }
    }
    stats.depth_bound = static_cast<uint64_t>(oracle.hidden_graph().edge_count()) +
                        static_cast<uint64_t>(n);
    stats.mistake_bound = static_cast<uint64_t>(k) + 1;
    ledger.charge_modeled(ledger.label(modeled_label),
                          modeled_quantum_cost(stats.depth_bound, stats.mistake_bound, c));
    return {std::move(m), stats};
}

}  // namespace qgraph

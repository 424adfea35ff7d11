#include "qgraph/oracle.hpp"

#include <stdexcept>

#include "qgraph/rng.hpp"

namespace qgraph {

bool MatrixOracle::query_pair(int u, int v, QueryLedger::LabelId label) {
    if (u == v || u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("query_pair: bad vertex pair");
    ledger_->charge_classical(label);
    return graph_.has_edge(u, v);
}

bool MatrixOracle::query_pair(int u, int v, std::string_view label) {
    return query_pair(u, v, ledger_->label(label));
}

ListOracle::ListOracle(Graph g, QueryLedger& ledger) : graph_(std::move(g)), ledger_(&ledger) {
    order_.reserve(graph_.vertex_count());
    for (int v = 0; v < graph_.vertex_count(); ++v) order_.push_back(graph_.neighbors(v));
}

ListOracle::ListOracle(Graph g, QueryLedger& ledger, uint64_t order_seed)
    : ListOracle(std::move(g), ledger) {
    for (int v = 0; v < vertex_count(); ++v) {
        auto& row = order_[v];
        Rng rng = Rng::stream(order_seed, static_cast<uint64_t>(v));
        for (int i = static_cast<int>(row.size()) - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
            std::swap(row[i], row[j]);
        }
    }
}

std::optional<int> ListOracle::query_list(int v, int i, QueryLedger::LabelId label) {
    const int n = vertex_count();
    if (v < 0 || v >= n || i < 1 || i > n - 1)
        throw std::invalid_argument("query_list: index out of range");
    ledger_->charge_classical(label);
    if (i > static_cast<int>(order_[v].size())) return std::nullopt;
    return order_[v][i - 1];
}

std::optional<int> ListOracle::query_list(int v, int i, std::string_view label) {
    return query_list(v, i, ledger_->label(label));
}

}  // namespace qgraph

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/ledger.hpp"

namespace qgraph {

// Adjacency-matrix oracle: answers "is (u,v) an edge?" and charges exactly one
// classical query per answer. Answers are a pure function of the hidden graph.
class MatrixOracle {
public:
    MatrixOracle(Graph g, QueryLedger& ledger) : graph_(std::move(g)), ledger_(&ledger) {}

    int vertex_count() const { return graph_.vertex_count(); }

    bool query_pair(int u, int v, QueryLedger::LabelId label);
    bool query_pair(int u, int v, std::string_view label);

    QueryLedger& ledger() { return *ledger_; }

    // Simulation and instrumentation only; reading it is never charged and
    // algorithm code must not consult it for decisions.
    const Graph& hidden_graph() const { return graph_; }

private:
    Graph graph_;
    QueryLedger* ledger_;
};

// Adjacency-list oracle: position i of vertex v's row holds its i-th neighbor
// in neighbor_order, or the null symbol past the degree.
class ListOracle {
public:
    // Ascending neighbor order.
    ListOracle(Graph g, QueryLedger& ledger);
    // Seed-driven per-vertex permutation of the neighbor order.
    ListOracle(Graph g, QueryLedger& ledger, uint64_t order_seed);

    int vertex_count() const { return graph_.vertex_count(); }

    // i is 1-based, 1 <= i <= n-1; nullopt is the null symbol.
    std::optional<int> query_list(int v, int i, QueryLedger::LabelId label);
    std::optional<int> query_list(int v, int i, std::string_view label);

    QueryLedger& ledger() { return *ledger_; }
    const Graph& hidden_graph() const { return graph_; }
    const std::vector<int>& neighbor_order(int v) const { return order_[v]; }

private:
    Graph graph_;
    QueryLedger* ledger_;
    std::vector<std::vector<int>> order_;
};

}  // namespace qgraph

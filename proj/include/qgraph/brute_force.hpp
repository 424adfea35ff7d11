#pragma once

#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// Ground-truth oracles used by every test; exact, intended for desk scale.

struct VertexCoverWitness {
    int size = 0;
    std::vector<int> vertices;
};

// Minimum vertex cover via 2-way branching on an uncovered edge.
VertexCoverWitness brute_min_vertex_cover(const Graph& g);

struct MaxMatchingWitness {
    int size = 0;
    Matching matching;
};

// Maximum matching via repeated exhaustive alternating-path search.
MaxMatchingWitness brute_max_matching(const Graph& g);

struct MatchingCheck {
    bool is_matching = false;
    bool is_maximal = false;
};

// is_matching: edges lie in g and have pairwise-distinct endpoints.
// is_maximal: no edge of g has both endpoints outside the matched set.
MatchingCheck check_matching_properties(const Graph& g, const std::vector<Edge>& edges);

bool is_vertex_cover(const Graph& g, const std::vector<int>& cover);

// Deterministic greedy over pairs in canonical order; reference for the
// decision-tree module's oracle-driven scan.
Matching greedy_maximal_matching_direct(const Graph& g);

}  // namespace qgraph

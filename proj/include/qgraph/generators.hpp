#pragma once

#include <cstdint>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// Uniformly random simple graph with exactly m edges. Pure function of the seed.
Graph gen_random_graph(int n, uint64_t m, uint64_t seed);

// Graph whose edge set is a matching of exactly j edges on randomly placed vertices.
Graph gen_disjoint_edges(int n, int j, uint64_t placement_seed);

// Union of c vertex-disjoint t-cliques.
Graph gen_disjoint_cliques(int n, int c, int t, uint64_t placement_seed);

// Union of vertex-disjoint cycles of the given lengths (each >= 3).
Graph gen_cycle_instance(int n, const std::vector<int>& lengths, uint64_t placement_seed);

}  // namespace qgraph

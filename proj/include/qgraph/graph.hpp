#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qgraph {

// Unordered vertex pair, canonicalized as (min, max).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Canonical lexicographic ranking of the n(n-1)/2 unordered pairs over
// vertices 0..n-1. One indexing scheme is shared by the matrix oracle,
// the Grover search spaces and the adversary-instance bit positions.
uint64_t pair_count(int n);
uint64_t pair_rank(int n, int u, int v);
Edge pair_unrank(int n, uint64_t rank);

// Undirected simple graph on vertices 0..n-1. Immutable after construction;
// construction validates range, rejects self-loops and duplicate edges.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // Text format: first line "n m", then m lines "u v" with u < v.
    std::string to_text() const;
    static Graph from_text(const std::string& text);
    static Graph from_file(const std::string& path);

private:
    int n_ = 0;
    std::vector<Edge> edges_;                // sorted
    std::vector<std::vector<int>> adj_;      // sorted neighbor lists
    std::vector<uint64_t> edge_bits_;        // membership bitset over pair ranks
};

// A matching: set of edges with pairwise-distinct endpoints. Construction
// and add() enforce the disjointness invariant.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    void add(Edge e);
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool covers(int v) const;
    std::vector<int> vertices() const;  // V(M), sorted

private:
    std::vector<Edge> edges_;
    std::vector<int> endpoints_;  // sorted
};

}  // namespace qgraph

#include "qgraph/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "qgraph/rng.hpp"

namespace qgraph {

namespace {

// Random permutation of 0..n-1 (Fisher-Yates).
std::vector<int> shuffled_vertices(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace

Graph gen_random_graph(int n, uint64_t m, uint64_t seed) {
    const uint64_t total = pair_count(n);
    if (m > total) throw std::invalid_argument("gen_random_graph: m out of range");
    Rng rng(seed);
    // Floyd's subset sampling: uniform m-subset of pair ranks in O(m) memory.
    std::unordered_set<uint64_t> chosen;
    chosen.reserve(m * 2 + 1);
    for (uint64_t i = total - m; i < total; ++i) {
        const uint64_t r = rng.below(i + 1);
        if (!chosen.insert(r).second) chosen.insert(i);
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (uint64_t r : chosen) edges.push_back(pair_unrank(n, r));
    return Graph(n, std::move(edges));
}

Graph gen_disjoint_edges(int n, int j, uint64_t placement_seed) {
    if (j < 0 || 2 * j > n) throw std::invalid_argument("gen_disjoint_edges: 2j > n");
    Rng rng(placement_seed);
    const auto perm = shuffled_vertices(n, rng);
    std::vector<Edge> edges;
    edges.reserve(j);
    for (int i = 0; i < j; ++i) edges.push_back(make_edge(perm[2 * i], perm[2 * i + 1]));
    return Graph(n, std::move(edges));
}

Graph gen_disjoint_cliques(int n, int c, int t, uint64_t placement_seed) {
    if (t < 2) throw std::invalid_argument("gen_disjoint_cliques: t < 2");
    if (c < 0 || static_cast<long long>(c) * t > n)
        throw std::invalid_argument("gen_disjoint_cliques: c*t > n");
    Rng rng(placement_seed);
    const auto perm = shuffled_vertices(n, rng);
    std::vector<Edge> edges;
    for (int q = 0; q < c; ++q) {
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b)
                edges.push_back(make_edge(perm[q * t + a], perm[q * t + b]));
    }
    return Graph(n, std::move(edges));
}

Graph gen_cycle_instance(int n, const std::vector<int>& lengths, uint64_t placement_seed) {
    long long used = 0;
    for (int len : lengths) {
        if (len < 3) throw std::invalid_argument("gen_cycle_instance: cycle length < 3");
        used += len;
    }
    if (used > n) throw std::invalid_argument("gen_cycle_instance: lengths exceed n");
    Rng rng(placement_seed);
    const auto perm = shuffled_vertices(n, rng);
    std::vector<Edge> edges;
    int base = 0;
    for (int len : lengths) {
        for (int i = 0; i < len; ++i)
            edges.push_back(make_edge(perm[base + i], perm[base + (i + 1) % len]));
        base += len;
    }
    return Graph(n, std::move(edges));
}

}  // namespace qgraph

#include "qgraph/brute_force.hpp"

#include <algorithm>

namespace qgraph {

namespace {

struct VcSearch {
    const Graph* g;
    std::vector<char> in_cover;
    std::vector<int> current;
    std::vector<int> best;
    int best_size;

    const Edge* first_uncovered() const {
        for (const auto& e : g->edges())
            if (!in_cover[e.first] && !in_cover[e.second]) return &e;
        return nullptr;
    }

    void branch() {
        if (static_cast<int>(current.size()) >= best_size) return;
        const Edge* e = first_uncovered();
        if (!e) {
            best = current;
            best_size = static_cast<int>(current.size());
            return;
        }
        for (int v : {e->first, e->second}) {
            in_cover[v] = 1;
            current.push_back(v);
            branch();
            current.pop_back();
            in_cover[v] = 0;
        }
    }
};

}  // namespace

VertexCoverWitness brute_min_vertex_cover(const Graph& g) {
    VcSearch s;
    s.g = &g;
    s.in_cover.assign(g.vertex_count(), 0);
    s.best_size = g.vertex_count() + 1;
    // every vertex (upper bound that is always a cover)
    s.best.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) s.best[v] = v;
    s.best_size = g.vertex_count();
    if (g.edge_count() == 0) return {0, {}};
    s.branch();
    std::sort(s.best.begin(), s.best.end());
    return {static_cast<int>(s.best.size()), s.best};
}

namespace {

// Exhaustive DFS over simple alternating paths from a free vertex; returns an
// augmenting path if one exists. Complete (backtracks visitation), so blossoms
// need no special handling; exponential in the worst case but exact.
struct AugmentSearch {
    const Graph* g;
    std::vector<int> mate;  // -1 when free
    std::vector<char> on_path;
    std::vector<int> path;

    bool dfs(int v, bool need_matched_edge) {
        for (int u : g->neighbors(v)) {
            if (on_path[u]) continue;
            const bool edge_is_matched = (mate[v] == u);
            if (edge_is_matched != need_matched_edge) continue;
            if (!need_matched_edge && mate[u] == -1) {
                path.push_back(u);
                return true;  // reached a free vertex on an unmatched edge
            }
            on_path[u] = 1;
            path.push_back(u);
            if (dfs(u, !need_matched_edge)) return true;
            path.pop_back();
            on_path[u] = 0;
        }
        return false;
    }

    bool find_from(int s) {
        on_path.assign(g->vertex_count(), 0);
        path.clear();
        on_path[s] = 1;
        path.push_back(s);
        return dfs(s, false);
    }
};

}  // namespace

MaxMatchingWitness brute_max_matching(const Graph& g) {
    AugmentSearch s;
    s.g = &g;
    s.mate.assign(g.vertex_count(), -1);
    for (;;) {
        bool augmented = false;
        for (int v = 0; v < g.vertex_count() && !augmented; ++v) {
            if (s.mate[v] != -1) continue;
            if (!s.find_from(v)) continue;
            // flip matched/unmatched along the path
            for (size_t i = 0; i + 1 < s.path.size(); i += 2) {
                s.mate[s.path[i]] = s.path[i + 1];
                s.mate[s.path[i + 1]] = s.path[i];
            }
            augmented = true;
        }
        if (!augmented) break;
    }
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.mate[v] > v) m.add({v, s.mate[v]});
    return {m.size(), m};
}

MatchingCheck check_matching_properties(const Graph& g, const std::vector<Edge>& edges) {
    MatchingCheck out;
    std::vector<char> used(g.vertex_count(), 0);
    out.is_matching = true;
    for (auto e : edges) {
        const auto [u, v] = make_edge(e.first, e.second);
        if (u < 0 || v >= g.vertex_count() || u == v || !g.has_edge(u, v) || used[u] || used[v]) {
            out.is_matching = false;
        }
        if (u >= 0 && u < g.vertex_count()) used[u] = 1;
        if (v >= 0 && v < g.vertex_count()) used[v] = 1;
    }
    if (!out.is_matching) return out;  // maximality is only meaningful for matchings
    out.is_maximal = true;
    for (const auto& [u, v] : g.edges())
        if (!used[u] && !used[v]) out.is_maximal = false;
    return out;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& cover) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : cover) {
        if (v < 0 || v >= g.vertex_count()) return false;
        in[v] = 1;
    }
    for (const auto& [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

Matching greedy_maximal_matching_direct(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> used(n, 0);
    Matching m;
    for (int v = 0; v < n; ++v) {
        for (int u = v + 1; u < n; ++u) {
            if (used[v] || used[u]) continue;
            if (g.has_edge(v, u)) {
                m.add({v, u});
                used[v] = used[u] = 1;
            }
        }
    }
    return m;
}

}  // namespace qgraph

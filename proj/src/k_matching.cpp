#include "qgraph/k_matching.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgraph/brute_force.hpp"
#include "qgraph/decision_tree.hpp"
#include "qgraph/grover.hpp"
#include "qgraph/threshold_matching.hpp"

namespace qgraph {

void TypeState::reset(const std::vector<int>& matched_vertices) {
    type_.clear();
    memo_.clear();
    for (int v : matched_vertices) type_[v] = VertexType::type2;
}

void TypeState::add_type0(int v) { type_[v] = VertexType::type0; }

VertexType TypeState::type(int v) const {
    auto it = type_.find(v);
    if (it == type_.end()) throw std::invalid_argument("TypeState: untracked vertex");
    return it->second;
}

int TypeState::memo(int v) const {
    auto it = memo_.find(v);
    if (it == memo_.end()) throw std::invalid_argument("TypeState: memo of non-type1 vertex");
    return it->second;
}

void TypeState::set_type0(int v) {
    type_.at(v) = VertexType::type0;
    memo_.erase(v);
}

void TypeState::set_type1(int v, int outside_neighbor) {
    type_.at(v) = VertexType::type1;
    memo_[v] = outside_neighbor;
}

int TypeState::type2_count() const {
    int c = 0;
    for (const auto& [v, t] : type_)
        if (t == VertexType::type2) ++c;
    return c;
}

std::vector<int> TypeState::tracked_vertices() const {
    std::vector<int> out;
    out.reserve(type_.size());
    for (const auto& [v, t] : type_) out.push_back(v);
    return out;
}

bool is_candidate_path(const std::vector<int>& vertices, const std::set<Edge>& known_edges,
                       const Matching& m, const TypeState& types) {
    const size_t l = vertices.size();
    if (l < 2 || l % 2 != 0) return false;
    std::set<int> seen;
    for (int v : vertices) {
        if (!m.covers(v)) return false;
        if (!seen.insert(v).second) return false;  // simple
    }
    std::set<Edge> matching_edges(m.edges().begin(), m.edges().end());
    for (size_t i = 0; i + 1 < l; ++i) {
        const Edge e = make_edge(vertices[i], vertices[i + 1]);
        const bool odd_position = (i % 2 == 0);  // 1-based odd
        if (odd_position) {
            if (!matching_edges.count(e)) return false;
        } else {
            if (!known_edges.count(e) || matching_edges.count(e)) return false;
        }
    }
    const int a = vertices.front(), b = vertices.back();
    if (types.type(a) == VertexType::type0 || types.type(b) == VertexType::type0) return false;
    if (types.type(a) == VertexType::type1 && types.type(b) == VertexType::type1 &&
        types.memo(a) == types.memo(b))
        return false;
    return true;
}

namespace {

struct CandidateSearch {
    const std::set<Edge>* known;
    const Matching* m;
    const TypeState* types;
    std::set<Edge> matching_edges;
    std::map<int, std::vector<int>> adj;  // of known edges, sorted neighbors
    std::vector<int> path;
    std::vector<char> on_path;
    int want_len = 0;

    bool endpoint_ok(int v) const { return types->type(v) != VertexType::type0; }

    bool endpoints_compatible(int a, int b) const {
        if (types->type(a) == VertexType::type1 && types->type(b) == VertexType::type1)
            return types->memo(a) != types->memo(b);
        return true;
    }

    // Extends path (lexicographic DFS) to exactly want_len vertices; edge at
    // position i is a matching edge when i is even (0-based).
    bool dfs() {
        if (static_cast<int>(path.size()) == want_len) {
            return endpoints_compatible(path.front(), path.back());
        }
        const int v = path.back();
        const bool need_matching_edge = (path.size() % 2 == 1);
        for (int u : adj.at(v)) {
            if (on_path[u]) continue;
            const bool is_matching_edge = matching_edges.count(make_edge(v, u)) > 0;
            if (is_matching_edge != need_matching_edge) continue;
            if (static_cast<int>(path.size()) == want_len - 1 && !endpoint_ok(u)) continue;
            path.push_back(u);
            on_path[u] = 1;
            if (dfs()) return true;
            on_path[u] = 0;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<CandidatePath> find_candidate_path(const std::set<Edge>& known_edges,
                                                 const Matching& m, const TypeState& types) {
    const std::vector<int> vm = m.vertices();
    if (vm.empty()) return std::nullopt;
    const int max_v = vm.back();

    CandidateSearch s;
    s.known = &known_edges;
    s.m = &m;
    s.types = &types;
    s.matching_edges.insert(m.edges().begin(), m.edges().end());
    for (int v : vm) s.adj[v];  // ensure rows exist
    for (const Edge& e : known_edges) {
        if (!m.covers(e.first) || !m.covers(e.second)) continue;
        s.adj[e.first].push_back(e.second);
        s.adj[e.second].push_back(e.first);
    }
    for (auto& [v, row] : s.adj) std::sort(row.begin(), row.end());

    // iterative deepening: shortest first, lexicographically least within a length
    for (int len = 2; len <= static_cast<int>(vm.size()); len += 2) {
        s.want_len = len;
        for (int start : vm) {
            if (!s.endpoint_ok(start)) continue;
            s.path.assign(1, start);
            s.on_path.assign(max_v + 1, 0);
            s.on_path[start] = 1;
            if (s.dfs()) return CandidatePath{s.path};
        }
    }
    return std::nullopt;
}

int potential(const Matching& m, const TypeState& types, int k) {
    return k - m.size() + types.type2_count();
}

namespace {

// Find-or-empty search for an outside neighbor of anchor, over the given
// candidate vertices; flags a truth-level miss as a search error.
struct NeighborSearch {
    std::optional<int> found;
    bool error = false;
};

NeighborSearch search_outside_neighbor(MatrixOracle& oracle, int anchor,
                                       const std::vector<int>& candidates, double epsilon,
                                       Rng& rng, QueryLedger::LabelId label) {
    const Graph* g = &oracle.hidden_graph();
    auto truth = [g, anchor, &candidates](uint64_t i) {
        return g->has_edge(anchor, candidates[i]);
    };
    auto charged = [&oracle, anchor, &candidates, label](uint64_t i) {
        return oracle.query_pair(anchor, candidates[i], label);
    };
    SearchSpace space(candidates.size(), truth, charged, &oracle.ledger(), label);
    NeighborSearch out;
    const auto idx = grover_find_or_empty(space, epsilon, rng);
    if (idx) {
        out.found = candidates[*idx];
    } else {
        out.error = space.marked_count() > 0;  // instrumentation truth check
    }
    return out;
}

}  // namespace

ExtendOutcome extend_candidate_path(MatrixOracle& oracle, double epsilon, const Matching& m,
                                    const CandidatePath& q, TypeState& types, Rng& rng) {
    const int n = oracle.vertex_count();
    QueryLedger& ledger = oracle.ledger();
    const auto label = ledger.label(kMatchingGroverLabel);

    std::vector<int> path = q.vertices;
    // validation uses the M edges on the path; outside-edge knowledge is the
    // caller's F, so re-check only the structural clauses that do not need F
    if (path.size() < 2 || path.size() % 2 != 0)
        throw std::invalid_argument("extend_candidate_path: bad path length");

    int v1 = path.front();
    int vl = path.back();
    const VertexType t1 = types.type(v1);
    const VertexType tl = types.type(vl);
    if (t1 == VertexType::type0 || tl == VertexType::type0)
        throw std::invalid_argument("extend_candidate_path: endpoint of type0");

    ExtendOutcome out;

    auto outside_vertices = [&](std::optional<int> excluded) {
        std::vector<int> c;
        c.reserve(n);
        for (int u = 0; u < n; ++u) {
            if (m.covers(u)) continue;
            if (excluded && u == *excluded) continue;
            c.push_back(u);
        }
        return c;
    };
    auto make_augmenting = [&](int s, int t) {
        std::vector<int> p;
        p.reserve(path.size() + 2);
        p.push_back(s);
        p.insert(p.end(), path.begin(), path.end());
        p.push_back(t);
        return p;
    };

    // Case 1: both endpoints type1 — zero queries.
    if (t1 == VertexType::type1 && tl == VertexType::type1) {
        const int s = types.memo(v1);
        const int t = types.memo(vl);
        if (s == t) throw std::invalid_argument("extend_candidate_path: equal memos");
        out.augmenting_path = make_augmenting(s, t);
        return out;
    }

    // Case 3 orientation: the type1 endpoint plays v1.
    if (t1 == VertexType::type1 || tl == VertexType::type1) {
        if (tl == VertexType::type1) {
            std::reverse(path.begin(), path.end());
            std::swap(v1, vl);
        }
        const int s = types.memo(path.front());
        const auto search = search_outside_neighbor(oracle, path.back(),
                                                    outside_vertices(s), epsilon, rng, label);
        out.search_error = search.error;
        if (search.found) {
            out.augmenting_path = make_augmenting(s, *search.found);
            return out;
        }
        const int end = path.back();
        if (oracle.query_pair(end, s, label))
            types.set_type1(end, s);
        else
            types.set_type0(end);
        out.updated_vertex = end;
        return out;
    }

    // Case 2: both type2.
    const auto first = search_outside_neighbor(oracle, v1, outside_vertices(std::nullopt),
                                               epsilon, rng, label);
    if (!first.found) {
        out.search_error = first.error;
        types.set_type0(v1);
        out.updated_vertex = v1;
        return out;
    }
    const int s = *first.found;
    const auto second = search_outside_neighbor(oracle, vl, outside_vertices(s), epsilon, rng,
                                                label);
    out.search_error = second.error;
    if (second.found) {
        out.augmenting_path = make_augmenting(s, *second.found);
        return out;
    }
    if (oracle.query_pair(vl, s, label))
        types.set_type1(vl, s);
    else
        types.set_type0(vl);
    out.updated_vertex = vl;
    return out;
}

namespace {

// True augmenting-path checks against the hidden graph; a violation here is a
// bug, not Grover bad luck (found neighbors are verified and memos are real).
void assert_valid_augmenting_path(const Graph& g, const Matching& m,
                                  const std::vector<int>& p) {
    if (p.size() < 2 || p.size() % 2 != 0)
        throw std::logic_error("augmenting path: bad length");
    if (m.covers(p.front()) || m.covers(p.back()))
        throw std::logic_error("augmenting path: endpoint already matched");
    std::set<int> seen;
    for (int v : p)
        if (!seen.insert(v).second) throw std::logic_error("augmenting path: not simple");
    std::set<Edge> matching_edges(m.edges().begin(), m.edges().end());
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        const Edge e = make_edge(p[i], p[i + 1]);
        if (!g.has_edge(e.first, e.second)) throw std::logic_error("augmenting path: non-edge");
        const bool expect_matched = (i % 2 == 1);
        if (matching_edges.count(e) != static_cast<size_t>(expect_matched))
            throw std::logic_error("augmenting path: alternation broken");
    }
}

Matching augment(const Matching& m, const std::vector<int>& p) {
    std::set<Edge> edges(m.edges().begin(), m.edges().end());
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        const Edge e = make_edge(p[i], p[i + 1]);
        if (edges.count(e))
            edges.erase(e);
        else
            edges.insert(e);
    }
    Matching out;
    for (const Edge& e : edges) out.add(e);
    return out;
}

}  // namespace

KMatchingRun quantum_k_matching(MatrixOracle& oracle, int k, Rng& rng) {
    if (k < 0) throw std::invalid_argument("quantum_k_matching: k < 0");
    KMatchingRun run;
    if (k == 0) {
        run.yes = true;
        return run;
    }
    const Graph& g = oracle.hidden_graph();
    QueryLedger& ledger = oracle.ledger();
    const auto f_label = ledger.label(kMatchingClassicalFLabel);
    const double epsilon = 1.0 / (12.0 * k);

    run.matching = quantum_threshold_maximal_matching(oracle, k - 1, rng);
    if (run.matching.size() >= k) {
        run.yes = true;
        return run;
    }

    std::set<Edge> known;  // F: queried edges of G[V(M)]
    auto query_into_f = [&](int a, int b) {
        if (oracle.query_pair(a, b, f_label)) known.insert(make_edge(a, b));
        ++run.classical_f_queries;
    };
    {
        const auto vm = run.matching.vertices();
        for (size_t i = 0; i < vm.size(); ++i)
            for (size_t j = i + 1; j < vm.size(); ++j) query_into_f(vm[i], vm[j]);
    }
    TypeState types;
    types.reset(run.matching.vertices());

    auto truth_checks_at_loop_head = [&] {
        if (!check_matching_properties(g, run.matching.edges()).is_maximal)
            run.alg1_failure = true;  // only an Alg-1 failure can break maximality
        const auto vm = run.matching.vertices();
        for (size_t i = 0; i < vm.size(); ++i)
            for (size_t j = i + 1; j < vm.size(); ++j)
                if (g.has_edge(vm[i], vm[j]) != (known.count(make_edge(vm[i], vm[j])) > 0))
                    run.f_exact = false;
    };

    while (run.matching.size() < k) {
        truth_checks_at_loop_head();
        const int phi_before = potential(run.matching, types, k);
        if (phi_before < 0 || phi_before > 2 * k) run.potential_ok = false;

        const auto q = find_candidate_path(known, run.matching, types);
        if (!q) return run;  // no candidate path: M is claimed maximum

        const auto step = extend_candidate_path(oracle, epsilon, run.matching, *q, types, rng);
        ++run.extend_calls;
        if (step.search_error) ++run.search_errors;

        if (step.augmenting_path) {
            const auto& p = *step.augmenting_path;
            assert_valid_augmenting_path(g, run.matching, p);
            const int s = p.front();
            const int t = p.back();
            run.matching = augment(run.matching, p);
            types.add_type0(s);
            types.add_type0(t);
            for (int v : types.tracked_vertices()) {
                if (types.type(v) == VertexType::type1) {
                    const int mv = types.memo(v);
                    if (mv == s || mv == t) types.set_type0(v);
                }
            }
            // query every new V(M) pair classically, including (s, t)
            for (int v : run.matching.vertices()) {
                if (v == s || v == t) continue;
                query_into_f(s, v);
                query_into_f(t, v);
            }
            query_into_f(s, t);
        }

        const int phi_after = potential(run.matching, types, k);
        if (phi_after != phi_before - 1) run.potential_ok = false;
    }
    truth_checks_at_loop_head();
    run.yes = true;
    return run;
}

MaxMatchingRun quantum_maximum_matching(MatrixOracle& oracle, Rng& rng) {
    MaxMatchingRun run;
    const auto [scan_matching, stats] =
        run_classical_maximal_matching(oracle, kMaxMatchingModeledLabel);
    run.doubled_k = 2 * scan_matching.size();
    run.inner = quantum_k_matching(oracle, run.doubled_k, rng);
    run.matching = run.inner.matching;
    return run;
}

}  // namespace qgraph

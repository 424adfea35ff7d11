#include "qgraph/vertex_cover.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qgraph/brute_force.hpp"
#include "qgraph/decision_tree.hpp"
#include "qgraph/grover.hpp"

namespace qgraph {

uint64_t kernelize_budget(int n, int k, double multiplier) {
    return static_cast<uint64_t>(std::ceil(multiplier * k * std::sqrt((k + 1.0) * n)));
}

namespace {

// Truth checks of Lemma-5 style properties against the hidden graph.
void run_property_checks(const Graph& g, int k, const Matching& m,
                         const std::vector<char>& in_u, const std::set<Edge>& discovered,
                         KernelizeResult& out) {
    const auto mc = check_matching_properties(g, m.edges());
    out.matching_maximal = mc.is_maximal;
    out.degree_property = true;
    out.edge_property = true;
    for (int v : m.vertices()) {
        const int deg = g.degree(v);
        if (deg >= k + 1 && !in_u[v]) out.degree_property = false;
        if (deg <= k) {
            for (int u : g.neighbors(v))
                if (!discovered.count(make_edge(v, u))) out.edge_property = false;
        }
    }
}

Kernel build_kernel(int n, int k, const Matching& m, const std::vector<char>& in_u,
                    const std::set<Edge>& discovered) {
    Kernel kernel;
    for (int v = 0; v < n; ++v)
        if (in_u[v]) kernel.forced.push_back(v);
    std::vector<Edge> pruned;
    for (const Edge& e : discovered)
        if (!in_u[e.first] && !in_u[e.second]) pruned.push_back(e);
    kernel.reduced = Graph(n, std::move(pruned));
    kernel.k_prime = k - static_cast<int>(kernel.forced.size());
    kernel.source_matching = m;
    return kernel;
}

}  // namespace

KernelizeResult kernelize(MatrixOracle& oracle, int k, Rng& rng, const KernelizeOptions& opts) {
    if (k < 0) throw std::invalid_argument("kernelize: k < 0");
    const int n = oracle.vertex_count();
    const Graph& g = oracle.hidden_graph();
    QueryLedger& ledger = oracle.ledger();
    KernelizeResult out;

    if (k == 0) {
        // Single emptiness test over all pairs, error 1/6, in place of the
        // threshold call; the Alg-3 budget is zero when k = 0.
        const auto label = ledger.label(kThresholdLabel);
        std::vector<char> matched(n, 0);
        SearchSpace space = free_pair_edge_space(oracle, matched, label);
        const auto found = grover_find_or_empty(space, 1.0 / 6.0, rng);
        if (found) {
            const auto [u, v] = pair_unrank(n, *found);
            out.no_instance = true;
            out.matching = Matching({{u, v}});
            out.matching_maximal = true;
            return out;
        }
        out.matching = Matching{};
        run_property_checks(g, k, out.matching, std::vector<char>(n, 0), {}, out);
        out.kernel = build_kernel(n, k, out.matching, std::vector<char>(n, 0), {});
        return out;
    }

    out.matching = quantum_threshold_maximal_matching(oracle, k, rng, opts.threshold);
    if (out.matching.size() > k) {
        out.no_instance = true;
        return out;
    }

    const auto label = ledger.label(kKernelGroverLabel);
    const uint64_t budget = kernelize_budget(n, k, opts.budget_multiplier);
    ledger.set_grover_budget(label, budget);

    const std::vector<int> matched_vertices = out.matching.vertices();
    std::vector<char> in_m(n, 0);
    for (int v : matched_vertices) in_m[v] = 1;
    std::vector<char> in_u(n, 0);
    std::vector<int> degree_found(n, 0);
    std::set<Edge> discovered;

    auto used = [&] {
        return ledger.grover(label) +
               (opts.threshold.charge_verification_to_budget ? ledger.classical(label) : 0);
    };

    while (used() < budget) {
        // candidate pairs: v in V(M)\U, u in V(G)\U, canonicalized and not yet
        // discovered; excluding known edges is free classical bookkeeping
        std::vector<uint64_t> candidates;
        for (int v : matched_vertices) {
            if (in_u[v]) continue;
            for (int u = 0; u < n; ++u) {
                if (u == v || in_u[u]) continue;
                if (in_m[u] && u < v) continue;  // both matched: keep one orientation
                const Edge e = make_edge(v, u);
                if (discovered.count(e)) continue;
                candidates.push_back(pair_rank(n, e.first, e.second));
            }
        }
        if (candidates.empty()) break;

        const Graph* gp = &g;
        auto truth = [gp, &candidates, n](uint64_t i) {
            const auto [u, v] = pair_unrank(n, candidates[i]);
            return gp->has_edge(u, v);
        };
        auto charged = [&oracle, &candidates, label, n](uint64_t i) {
            const auto [u, v] = pair_unrank(n, candidates[i]);
            return oracle.query_pair(u, v, label);
        };
        SearchSpace space(candidates.size(), truth, charged, &ledger, label);
        LasVegasOptions lv;
        lv.iteration_cap = budget - used();
        lv.cap_includes_verification = opts.threshold.charge_verification_to_budget;
        const GroverOutcome found = grover_lasvegas(space, rng, lv);
        if (!found.found) break;  // budget exhausted mid-search or space decided empty

        const auto [a, b] = pair_unrank(n, candidates[*found.found]);
        discovered.insert(make_edge(a, b));
        for (int v : {a, b}) {
            if (!in_m[v]) continue;
            if (++degree_found[v] > k) in_u[v] = 1;
        }
    }

    run_property_checks(g, k, out.matching, in_u, discovered, out);
    out.kernel = build_kernel(n, k, out.matching, in_u, discovered);
    return out;
}

FptResult classical_fpt_vc(const Graph& g, int k) {
    if (k < 0) return {};
    struct Search {
        const Graph* g;
        int k;
        std::vector<char> picked;
        std::vector<int> stack;
        FptResult result;

        bool rec(int depth) {
            const Edge* uncovered = nullptr;
            for (const auto& e : g->edges()) {
                if (!picked[e.first] && !picked[e.second]) {
                    uncovered = &e;
                    break;
                }
            }
            if (!uncovered) {
                result.yes = true;
                result.cover = stack;
                std::sort(result.cover.begin(), result.cover.end());
                return true;
            }
            if (depth == k) return false;
            for (int v : {uncovered->first, uncovered->second}) {
                picked[v] = 1;
                stack.push_back(v);
                if (rec(depth + 1)) return true;
                stack.pop_back();
                picked[v] = 0;
            }
            return false;
        }
    };
    Search s;
    s.g = &g;
    s.k = k;
    s.picked.assign(g.vertex_count(), 0);
    s.rec(0);
    return s.result;
}

namespace {

VertexCoverRun finish_with_kernel(const Graph& g, int k, KernelizeResult&& kr) {
    VertexCoverRun run;
    run.matching_maximal = kr.matching_maximal;
    run.kernel_properties_ok = kr.degree_property && kr.edge_property;
    if (kr.no_instance) {
        run.no_via_matching_gate = true;
        return run;
    }
    run.kernel = std::move(kr.kernel);
    const FptResult fpt = classical_fpt_vc(run.kernel->reduced, run.kernel->k_prime);
    if (!fpt.yes) return run;
    std::vector<int> cover = run.kernel->forced;
    cover.insert(cover.end(), fpt.cover.begin(), fpt.cover.end());
    std::sort(cover.begin(), cover.end());
    if (is_vertex_cover(g, cover) && static_cast<int>(cover.size()) <= k) {
        run.yes = true;
        run.cover = std::move(cover);
    } else {
        run.witness_downgraded = true;  // unsound yes from a failed kernel
    }
    return run;
}

}  // namespace

VertexCoverRun quantum_vertex_cover(MatrixOracle& oracle, int k, Rng& rng) {
    KernelizeResult kr = kernelize(oracle, k, rng);
    return finish_with_kernel(oracle.hidden_graph(), k, std::move(kr));
}

VertexCoverRun list_model_vertex_cover(ListOracle& oracle, int k, Rng& rng) {
    if (k < 0) throw std::invalid_argument("list_model_vertex_cover: k < 0");
    (void)rng;  // the list path is fully classical; kept for interface symmetry
    const int n = oracle.vertex_count();
    const Graph& g = oracle.hidden_graph();
    QueryLedger& ledger = oracle.ledger();
    const auto classify_label = ledger.label(kListVcClassicalLabel);

    const auto [m, stats] = run_list_scan_matching(oracle, k, kListVcModeledLabel);
    KernelizeResult kr;
    kr.matching = m;
    if (m.size() > k) {
        kr.no_instance = true;
        return finish_with_kernel(g, k, std::move(kr));
    }

    std::vector<char> in_u(n, 0);
    int k_prime = k;
    std::set<Edge> discovered;
    for (int v : m.vertices()) {
        std::vector<int> fresh_neighbors;
        for (int i = 1; i <= k + 1 && i <= n - 1; ++i) {
            const auto w = oracle.query_list(v, i, classify_label);
            if (!w) break;
            if (!in_u[*w]) fresh_neighbors.push_back(*w);
        }
        if (static_cast<int>(fresh_neighbors.size()) <= k_prime) {
            for (int w : fresh_neighbors) discovered.insert(make_edge(v, w));
        } else {
            in_u[v] = 1;
            --k_prime;
        }
    }

    // Prune U-incident edges before the classical solve, mirroring the
    // matrix-model algorithm, so the witness U ∪ S is sound.
    run_property_checks(g, k, m, in_u, discovered, kr);
    kr.kernel = build_kernel(n, k, m, in_u, discovered);
    return finish_with_kernel(g, k, std::move(kr));
}

std::string kernel_to_text(const Kernel& kernel) {
    std::ostringstream out;
    out << kernel.reduced.to_text();
    out << "U:";
    for (int v : kernel.forced) out << ' ' << v;
    out << '\n';
    out << "k': " << kernel.k_prime << '\n';
    return out.str();
}

}  // namespace qgraph

#include "qgraph/lower_bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qgraph {

namespace {

void check_enumeration_feasible(int n) {
    if (n < 2 || pair_count(n) > 64)
        throw std::invalid_argument("adversary enumeration: n out of the feasible range (2..11)");
}

uint64_t edge_bit(int n, int u, int v) { return 1ULL << pair_rank(n, u, v); }

// Recursive enumeration of j-edge matchings: edges added in increasing rank,
// endpoints tracked in a vertex mask.
void matchings_rec(int n, int j, uint64_t next_rank, uint32_t used_vertices, uint64_t bits,
                   std::vector<uint64_t>& out) {
    if (j == 0) {
        out.push_back(bits);
        return;
    }
    for (uint64_t r = next_rank; r < pair_count(n); ++r) {
        const auto [u, v] = pair_unrank(n, r);
        if (used_vertices & ((1u << u) | (1u << v))) continue;
        matchings_rec(n, j - 1, r + 1, used_vertices | (1u << u) | (1u << v),
                      bits | (1ULL << r), out);
    }
}

uint64_t clique_bits(int n, const std::vector<int>& vertices) {
    uint64_t bits = 0;
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            bits |= edge_bit(n, vertices[a], vertices[b]);
    return bits;
}

// Unordered families of `count` disjoint t-subsets, canonical by increasing
// minimum vertex of each subset.
void clique_families_rec(int n, int t, int count, int min_start, uint32_t used, uint64_t bits,
                         std::vector<uint64_t>& out) {
    if (count == 0) {
        out.push_back(bits);
        return;
    }
    // the next subset's minimum vertex
    for (int first = min_start; first < n; ++first) {
        if (used & (1u << first)) continue;
        std::vector<int> chosen = {first};
        // choose the remaining t-1 vertices above `first`
        std::vector<int> pool;
        for (int v = first + 1; v < n; ++v)
            if (!(used & (1u << v))) pool.push_back(v);
        if (static_cast<int>(pool.size()) < t - 1) continue;
        std::vector<int> idx(t - 1);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<int> verts = chosen;
            uint32_t mask = 1u << first;
            for (int i : idx) {
                verts.push_back(pool[i]);
                mask |= 1u << pool[i];
            }
            clique_families_rec(n, t, count - 1, first + 1, used | mask,
                                bits | clique_bits(n, verts), out);
            // next combination
            int p = t - 2;
            while (p >= 0 && idx[p] == static_cast<int>(pool.size()) - (t - 1 - p)) --p;
            if (p < 0) break;
            ++idx[p];
            for (int q = p + 1; q < t - 1; ++q) idx[q] = idx[q - 1] + 1;
        }
    }
}

// All labeled cycles of the given length, as edge bitsets. Canonical form:
// start at the smallest vertex, second vertex smaller than the last.
void cycles_of_length(int n, int len, std::vector<uint64_t>& out) {
    std::vector<int> verts;
    std::vector<char> used(n, 0);
    std::vector<int> seq;

    // choose the vertex set implicitly by walking sequences whose first
    // element is the minimum of the cycle
    std::function<void(int)> walk = [&](int first) {
        if (static_cast<int>(seq.size()) == len) {
            if (seq[1] < seq.back()) {  // direction canonicalization
                uint64_t bits = 0;
                for (int i = 0; i < len; ++i)
                    bits |= edge_bit(n, seq[i], seq[(i + 1) % len]);
                out.push_back(bits);
            }
            return;
        }
        for (int v = first + 1; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            seq.push_back(v);
            walk(first);
            seq.pop_back();
            used[v] = 0;
        }
    };
    for (int first = 0; first + len <= n + 0; ++first) {
        // `first` is the smallest cycle vertex; others come from {first+1..n-1}
        used.assign(n, 0);
        used[first] = 1;
        seq.assign(1, first);
        walk(first);
    }
}

void relate_by_containment(AdversaryInstance& inst) {
    inst.relation.assign(inst.xs.size(), {});
    for (size_t xi = 0; xi < inst.xs.size(); ++xi) {
        for (size_t yi = 0; yi < inst.ys.size(); ++yi) {
            const uint64_t x = inst.xs[xi], y = inst.ys[yi];
            if ((x & y) == x && x != y) inst.relation[xi].push_back(static_cast<int>(yi));
        }
    }
}

}  // namespace

std::vector<uint64_t> enumerate_matchings(int n, int j) {
    check_enumeration_feasible(n);
    if (j < 0 || 2 * j > n) throw std::invalid_argument("enumerate_matchings: 2j > n");
    std::vector<uint64_t> out;
    matchings_rec(n, j, 0, 0, 0, out);
    return out;
}

AdversaryInstance build_matching_family_vc(int n, int k) {
    check_enumeration_feasible(n);
    if (k < 1 || 2 * (k + 1) > n)
        throw std::invalid_argument("matching family: 2(k+1) > n");
    AdversaryInstance inst;
    inst.family = "vc-matchings";
    inst.n = n;
    inst.k = k;
    inst.xs = enumerate_matchings(n, k);
    inst.ys = enumerate_matchings(n, k + 1);
    relate_by_containment(inst);
    return inst;
}

AdversaryInstance build_matching_family_km(int n, int k) {
    check_enumeration_feasible(n);
    if (k < 1 || 2 * k > n) throw std::invalid_argument("matching family: 2k > n");
    AdversaryInstance inst;
    inst.family = "km-matchings";
    inst.n = n;
    inst.k = k;
    inst.xs = enumerate_matchings(n, k - 1);
    inst.ys = enumerate_matchings(n, k);
    relate_by_containment(inst);
    return inst;
}

AdversaryInstance build_clique_family(int n, int k, int t) {
    check_enumeration_feasible(n);
    if (t < 2) throw std::invalid_argument("clique family: t < 2");
    if (k < 1) throw std::invalid_argument("clique family: k < 1");
    const int c = k / (t - 1);
    if (static_cast<long long>(c + 1) * t > n)
        throw std::invalid_argument("clique family: (c+1)t > n");
    AdversaryInstance inst;
    inst.family = "cliques";
    inst.n = n;
    inst.k = k;
    inst.t = t;
    clique_families_rec(n, t, c, 0, 0, 0, inst.xs);
    clique_families_rec(n, t, c + 1, 0, 0, 0, inst.ys);
    relate_by_containment(inst);
    return inst;
}

AdversaryInstance build_cycle_family(int n, int k) {
    check_enumeration_feasible(n);
    if (k < 2 || 2 * k > n) throw std::invalid_argument("cycle family: need 3 <= ... and 2k <= n");
    AdversaryInstance inst;
    inst.family = "cycles";
    inst.n = n;
    inst.k = k;
    cycles_of_length(n, 2 * k, inst.xs);

    // Y: disjoint cycle pairs, lengths (a, 2k-a), both >= max(3, ceil(k/2)), a odd.
    // a odd forces 2k-a odd as well; enumerate a <= 2k-a to keep pairs unordered.
    std::map<uint64_t, int> y_index;
    const int min_len = std::max(3, (k + 1) / 2);
    for (int a = min_len; 2 * a <= 2 * k; ++a) {
        if (a % 2 == 0) continue;
        const int b = 2 * k - a;
        if (b < min_len) continue;
        std::vector<uint64_t> first_cycles, second_cycles;
        cycles_of_length(n, a, first_cycles);
        cycles_of_length(n, b, second_cycles);
        auto cycle_vertices = [&](uint64_t bits) {
            uint32_t mask = 0;
            for (int r = 0; r < static_cast<int>(pair_count(n)); ++r)
                if (bits & (1ULL << r)) {
                    const auto [u, v] = pair_unrank(n, r);
                    mask |= (1u << u) | (1u << v);
                }
            return mask;
        };
        std::vector<uint32_t> first_masks(first_cycles.size()), second_masks(second_cycles.size());
        for (size_t i = 0; i < first_cycles.size(); ++i) first_masks[i] = cycle_vertices(first_cycles[i]);
        for (size_t i = 0; i < second_cycles.size(); ++i) second_masks[i] = cycle_vertices(second_cycles[i]);
        for (size_t i = 0; i < first_cycles.size(); ++i) {
            for (size_t j = 0; j < second_cycles.size(); ++j) {
                if (first_masks[i] & second_masks[j]) continue;
                if (a == b && first_cycles[i] > second_cycles[j]) continue;  // unordered pair
                const uint64_t bits = first_cycles[i] | second_cycles[j];
                if (!y_index.count(bits)) {
                    y_index[bits] = static_cast<int>(inst.ys.size());
                    inst.ys.push_back(bits);
                }
            }
        }
    }

    // Relation via explicit 2-swaps: remove edges (p,q) and (r,s) of x, add
    // one of the two cross pairings; keep exactly the swaps landing in Y.
    inst.relation.assign(inst.xs.size(), {});
    for (size_t xi = 0; xi < inst.xs.size(); ++xi) {
        const uint64_t x = inst.xs[xi];
        std::vector<Edge> edges;
        for (int r = 0; r < static_cast<int>(pair_count(n)); ++r)
            if (x & (1ULL << r)) edges.push_back(pair_unrank(n, r));
        std::set<int> related;
        for (size_t i = 0; i < edges.size(); ++i) {
            for (size_t j = i + 1; j < edges.size(); ++j) {
                const auto [p, q] = edges[i];
                const auto [r, s] = edges[j];
                if (p == r || p == s || q == r || q == s) continue;
                const uint64_t removed = edge_bit(n, p, q) | edge_bit(n, r, s);
                for (const auto& added : {std::pair{make_edge(p, r), make_edge(q, s)},
                                          std::pair{make_edge(p, s), make_edge(q, r)}}) {
                    const uint64_t add_bits = edge_bit(n, added.first.first, added.first.second) |
                                              edge_bit(n, added.second.first, added.second.second);
                    if (add_bits & x) continue;  // an added edge already present
                    const uint64_t candidate = (x & ~removed) | add_bits;
                    auto it = y_index.find(candidate);
                    if (it != y_index.end()) related.insert(it->second);
                }
            }
        }
        inst.relation[xi].assign(related.begin(), related.end());
    }
    return inst;
}

AdversaryQuantities adversary_quantities(const AdversaryInstance& inst) {
    bool any = false;
    for (const auto& row : inst.relation)
        if (!row.empty()) any = true;
    if (!any) throw std::invalid_argument("adversary_quantities: empty relation");

    const int positions = static_cast<int>(pair_count(inst.n));
    AdversaryQuantities out;

    // m, m'
    std::vector<uint64_t> y_degree(inst.ys.size(), 0);
    out.m = UINT64_MAX;
    for (size_t xi = 0; xi < inst.xs.size(); ++xi) {
        out.m = std::min(out.m, static_cast<uint64_t>(inst.relation[xi].size()));
        for (int yi : inst.relation[xi]) ++y_degree[yi];
    }
    out.m_prime = *std::min_element(y_degree.begin(), y_degree.end());

    // l_{x,i} and l'_{y,i}: counts of related partners differing at position i
    std::vector<uint64_t> lx(inst.xs.size() * positions, 0);
    std::vector<uint64_t> ly(inst.ys.size() * positions, 0);
    for (size_t xi = 0; xi < inst.xs.size(); ++xi) {
        for (int yi : inst.relation[xi]) {
            uint64_t diff = inst.xs[xi] ^ inst.ys[yi];
            while (diff) {
                const int i = std::countr_zero(diff);
                diff &= diff - 1;
                ++lx[xi * positions + i];
                ++ly[static_cast<size_t>(yi) * positions + i];
            }
        }
    }

    // l_max and v over related pairs and differing positions
    uint64_t v_num = 0, v_den = 1;  // max of min(lx/m, ly/m') as a fraction
    for (size_t xi = 0; xi < inst.xs.size(); ++xi) {
        for (int yi : inst.relation[xi]) {
            uint64_t diff = inst.xs[xi] ^ inst.ys[yi];
            while (diff) {
                const int i = std::countr_zero(diff);
                diff &= diff - 1;
                const uint64_t a = lx[xi * positions + i];
                const uint64_t b = ly[static_cast<size_t>(yi) * positions + i];
                out.l_max = std::max(out.l_max, a * b);
                out.max_l_xi = std::max(out.max_l_xi, a);
                out.max_l_yi = std::max(out.max_l_yi, b);
                // min(a/m, b/m') without floats
                uint64_t num, den;
                if (a * out.m_prime <= b * out.m) {
                    num = a;
                    den = out.m;
                } else {
                    num = b;
                    den = out.m_prime;
                }
                if (num * v_den > v_num * den) {
                    v_num = num;
                    v_den = den;
                }
            }
        }
    }
    const uint64_t g = std::gcd(v_num, v_den);
    out.v = Fraction{v_num / g, v_den / g};
    out.bound = std::sqrt(static_cast<double>(out.m) * static_cast<double>(out.m_prime) /
                          static_cast<double>(out.l_max));
    return out;
}

Fraction randomized_quantity_v(const AdversaryInstance& inst) {
    return adversary_quantities(inst).v;
}

}  // namespace qgraph

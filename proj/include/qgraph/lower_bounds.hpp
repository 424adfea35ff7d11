#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// Explicit adversary-method instance: families X (function value 1) and Y
// (function value 0) of labeled graphs on n vertices, stored as edge bitsets
// over the canonical pair ranking, plus the relation R as per-x adjacency.
// Enumeration feasibility caps n at 11 (bitsets are single words).
struct AdversaryInstance {
    std::string family;
    int n = 0;
    int k = 0;
    int t = 0;  // clique size; 0 for the other families
    std::vector<uint64_t> xs;
    std::vector<uint64_t> ys;
    std::vector<std::vector<int>> relation;  // x index -> sorted related y indices
};

// All matchings of exactly j edges on n labeled vertices, as edge bitsets.
std::vector<uint64_t> enumerate_matchings(int n, int j);

// X = k-edge matchings, Y = (k+1)-edge matchings, R = strict containment.
AdversaryInstance build_matching_family_vc(int n, int k);

// X = unions of c disjoint t-cliques with c = floor(k/(t-1)), Y = c+1 cliques,
// R = containment.
AdversaryInstance build_clique_family(int n, int k, int t);

// X = (k-1)-edge matchings, Y = k-edge matchings, R = containment.
AdversaryInstance build_matching_family_km(int n, int k);

// X = single 2k-cycles, Y = disjoint cycle pairs with |C1|+|C2| = 2k, both at
// least k/2 and |C1| odd; R relates x to the y produced by a 2-swap of two of
// x's edges.
AdversaryInstance build_cycle_family(int n, int k);

struct Fraction {
    uint64_t num = 0;
    uint64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct AdversaryQuantities {
    uint64_t m = 0;        // min over x of #related y
    uint64_t m_prime = 0;  // min over y of #related x
    uint64_t l_max = 0;    // max over related (x,y), differing i of l_{x,i} * l'_{y,i}
    double bound = 0.0;    // sqrt(m * m' / l_max)
    uint64_t max_l_xi = 0;      // largest single l_{x,i} over differing positions
    uint64_t max_l_yi = 0;      // largest single l'_{y,i}
    Fraction v;                 // exact max of min(l_{x,i}/m, l'_{y,i}/m')
};

// Brute-force evaluation of the adversary and randomized lower-bound
// quantities over the explicit relation. Throws on an empty relation.
AdversaryQuantities adversary_quantities(const AdversaryInstance& instance);

Fraction randomized_quantity_v(const AdversaryInstance& instance);

}  // namespace qgraph

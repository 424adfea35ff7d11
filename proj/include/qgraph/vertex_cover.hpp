#pragma once

#include <optional>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/oracle.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/threshold_matching.hpp"

namespace qgraph {

inline constexpr const char* kKernelGroverLabel = "alg3.grover";
inline constexpr const char* kKernelClassicalLabel = "alg3.classical";
inline constexpr const char* kListVcClassicalLabel = "listvc.classical";
inline constexpr const char* kListVcModeledLabel = "listvc.modeled";

// Kernel of a k-vertex-cover instance: forced cover vertices U, the reduced
// graph G' (same vertex range, U-incident edges pruned), and k' = k - |U|.
struct Kernel {
    std::vector<int> forced;  // U, sorted
    Graph reduced;
    int k_prime = 0;          // may be negative
    Matching source_matching;
};

struct KernelizeResult {
    bool no_instance = false;      // matching of size k+1 found
    std::optional<Kernel> kernel;  // set iff !no_instance
    Matching matching;
    // Post-hoc truth checks (instrumentation, never charged):
    bool matching_maximal = true;   // Alg-1 output was maximal
    bool degree_property = true;    // every matched vertex of true degree >= k+1 is in U
    bool edge_property = true;      // every matched vertex of true degree <= k had all edges discovered
};

struct KernelizeOptions {
    double budget_multiplier = 192.0;
    ThresholdOptions threshold;
};

uint64_t kernelize_budget(int n, int k, double multiplier = 192.0);

// Algorithm-3 quantum query kernelization: threshold matching gate, then the
// degree-classification while-loop over pairs {V(M)\U} x {V(G)\U} minus the
// already-discovered edges.
KernelizeResult kernelize(MatrixOracle& oracle, int k, Rng& rng,
                          const KernelizeOptions& opts = {});

struct FptResult {
    bool yes = false;
    std::vector<int> cover;  // sorted witness, valid iff yes
};

// Exact bounded-depth branching on an uncovered edge; k < 0 is an immediate No.
FptResult classical_fpt_vc(const Graph& g, int k);

struct VertexCoverRun {
    bool yes = false;
    std::vector<int> cover;
    bool no_via_matching_gate = false;
    bool matching_maximal = true;
    bool kernel_properties_ok = true;
    // A classical "yes" whose witness failed the truth check is downgraded to
    // No so that every reported yes carries a genuine cover.
    bool witness_downgraded = false;
    std::optional<Kernel> kernel;
};

VertexCoverRun quantum_vertex_cover(MatrixOracle& oracle, int k, Rng& rng);

// Appendix variant: threshold matching through the decision-tree cost model
// (classical scan with modeled quantum cost), then at most k+1 list queries
// per matched vertex to classify it, then the classical solve.
VertexCoverRun list_model_vertex_cover(ListOracle& oracle, int k, Rng& rng);

// Graph text plus "U: ..." and "k': ..." header lines.
std::string kernel_to_text(const Kernel& kernel);

}  // namespace qgraph

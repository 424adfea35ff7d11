#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/oracle.hpp"
#include "qgraph/rng.hpp"

namespace qgraph {

inline constexpr const char* kMatchingGroverLabel = "alg5.grover";
inline constexpr const char* kMatchingClassicalFLabel = "alg5.classicalF";
inline constexpr const char* kMaxMatchingModeledLabel = "maxmatching.modeled";

enum class VertexType : uint8_t { type0, type1, type2 };

// Knowledge state about each matched vertex's neighbors outside V(M):
// type0 = none, type1 = exactly one (memoized), type2 = unknown.
class TypeState {
public:
    void reset(const std::vector<int>& matched_vertices);  // all type2
    void add_type0(int v);                                 // new matched vertex
    VertexType type(int v) const;
    int memo(int v) const;  // defined exactly on type1 vertices
    void set_type0(int v);
    void set_type1(int v, int outside_neighbor);
    int type2_count() const;
    std::vector<int> tracked_vertices() const;  // sorted

private:
    std::map<int, VertexType> type_;
    std::map<int, int> memo_;
};

struct CandidatePath {
    std::vector<int> vertices;  // v1..vl, l even
};

// Definition checks: even length >= 2, vertices in V(M), odd-position edges in
// M, even-position edges known non-matching edges, simple, endpoints not
// type0, and distinct memos when both endpoints are type1.
bool is_candidate_path(const std::vector<int>& vertices, const std::set<Edge>& known_edges,
                       const Matching& m, const TypeState& types);

// Deterministic search: lexicographically least vertex sequence among shortest
// candidate paths in (V(M), known_edges), or nullopt when none exists.
// Exhaustive over simple alternating paths (exponential in |V(M)| worst case;
// |V(M)| <= 2k at desk scale).
std::optional<CandidatePath> find_candidate_path(const std::set<Edge>& known_edges,
                                                 const Matching& m, const TypeState& types);

struct ExtendOutcome {
    std::optional<std::vector<int>> augmenting_path;  // s, v1..vl, t
    int updated_vertex = -1;                          // set when a type changed instead
    bool search_error = false;  // a find-or-empty returned empty against the truth
};

// Algorithm-4 step: extends the candidate path to an augmenting path or
// updates one endpoint's type, using grover_find_or_empty with the given
// epsilon for the outside-neighbor searches. Throws if Q is not a valid
// candidate path.
ExtendOutcome extend_candidate_path(MatrixOracle& oracle, double epsilon, const Matching& m,
                                    const CandidatePath& q, TypeState& types, Rng& rng);

// Phi = k - |M| + #type2; certifies at most 2k extend calls.
int potential(const Matching& m, const TypeState& types, int k);

struct KMatchingRun {
    bool yes = false;
    Matching matching;  // final matching: size >= k on yes, else the claimed maximum
    int extend_calls = 0;
    int search_errors = 0;
    bool alg1_failure = false;       // threshold output was not maximal (truth check)
    bool potential_ok = true;        // Phi dropped by exactly 1 per call, stayed in [0, 2k]
    bool f_exact = true;             // F matched the true G[V(M)] at every loop head
    uint64_t classical_f_queries = 0;
};

// Algorithm 5: threshold matching with parameter k-1, then candidate-path
// augmentation driven by the potential function; epsilon = 1/(12k).
KMatchingRun quantum_k_matching(MatrixOracle& oracle, int k, Rng& rng);

struct MaxMatchingRun {
    Matching matching;
    int doubled_k = 0;  // 2 * size of the scanned maximal matching
    KMatchingRun inner;
};

// Maximal matching via the decision-tree scan (modeled cost under
// maxmatching.modeled), then Quantum k-Matching with k = 2 * |scan matching|.
MaxMatchingRun quantum_maximum_matching(MatrixOracle& oracle, Rng& rng);

}  // namespace qgraph

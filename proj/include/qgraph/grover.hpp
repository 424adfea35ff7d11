#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qgraph/ledger.hpp"
#include "qgraph/rng.hpp"

namespace qgraph {

// Success probability of measuring a marked index after j Grover iterations:
// sin^2((2j+1) * arcsin(sqrt(K/N))). Returns 0 when K = 0.
double success_probability(uint64_t space_size, uint64_t marked, uint64_t iterations);

// Oracle-defined search predicate over indices [0, N). The charged test
// consumes exactly one oracle query per evaluation; the truth predicate and
// the marked count are read from the hidden instance for the exact simulation
// only and are never charged. The quantum state is reduced to the 2-dimensional
// marked/unmarked subspace, so no N-sized state is ever materialized.
class SearchSpace {
public:
    SearchSpace(uint64_t size,
                std::function<bool(uint64_t)> truth,
                std::function<bool(uint64_t)> charged_test,
                QueryLedger* ledger, QueryLedger::LabelId label);

    // Synthetic space with the first `marked` indices marked; for tests and
    // calibration runs. Charges classical queries under the label.
    static SearchSpace synthetic(uint64_t size, uint64_t marked,
                                 QueryLedger* ledger, QueryLedger::LabelId label);

    uint64_t size() const { return size_; }
    bool truth(uint64_t i) const { return truth_(i); }
    bool marked_test(uint64_t i) { return charged_test_(i); }
    uint64_t marked_count() const;  // cached scan
    void charge_iterations(uint64_t j);

private:
    uint64_t size_;
    std::function<bool(uint64_t)> truth_;
    std::function<bool(uint64_t)> charged_test_;
    QueryLedger* ledger_;
    QueryLedger::LabelId label_;
    mutable std::optional<uint64_t> marked_count_;
};

struct GroverOutcome {
    std::optional<uint64_t> found;       // verified marked index
    uint64_t iterations_used = 0;
    uint64_t verification_queries = 0;
};

// Fixed-iteration run: charges exactly j iterations, measures (marked index
// uniform on success, unmarked uniform otherwise), then verifies the measured
// candidate with exactly one classical query. found is set only on a verified
// marked index.
GroverOutcome grover_run(SearchSpace& space, uint64_t iterations, Rng& rng);

struct LasVegasOptions {
    std::optional<uint64_t> iteration_cap;    // cut mid-search once reached
    bool cap_includes_verification = false;   // alternative budget accounting
};

// Las-Vegas search with unknown marked count (schedule: m starts at 1, each
// round draws j uniform in {0..ceil(m)-1}, failure grows m by 6/5 up to
// sqrt(N)). With no cap and zero marked indices it never returns.
GroverOutcome grover_lasvegas(SearchSpace& space, Rng& rng, const LasVegasOptions& opts = {});

inline constexpr double kEmptinessCapFactor = 24.0;

// Bounded-error find-or-empty: ceil(log3(1/epsilon)) independent capped
// Las-Vegas repetitions. Empty is always correct when no index is marked;
// a marked index is returned with probability >= 1 - epsilon otherwise.
std::optional<uint64_t> grover_find_or_empty(SearchSpace& space, double epsilon, Rng& rng);

// Number of repetitions used by grover_find_or_empty (exposed for budget math).
int emptiness_repetitions(double epsilon);

}  // namespace qgraph

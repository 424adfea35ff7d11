#include "qgraph/grover.hpp"

#include <cmath>
#include <stdexcept>

namespace qgraph {

double success_probability(uint64_t space_size, uint64_t marked, uint64_t iterations) {
    if (space_size < 1) throw std::invalid_argument("success_probability: empty space");
    if (marked > space_size) throw std::invalid_argument("success_probability: K > N");
    if (marked == 0) return 0.0;
    const double theta = std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(space_size)));
    const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
    double p = s * s;
    if (p > 1.0) p = 1.0;
    return p;
}

SearchSpace::SearchSpace(uint64_t size,
                         std::function<bool(uint64_t)> truth,
                         std::function<bool(uint64_t)> charged_test,
                         QueryLedger* ledger, QueryLedger::LabelId label)
    : size_(size),
      truth_(std::move(truth)),
      charged_test_(std::move(charged_test)),
      ledger_(ledger),
      label_(label) {}

SearchSpace SearchSpace::synthetic(uint64_t size, uint64_t marked,
                                   QueryLedger* ledger, QueryLedger::LabelId label) {
    if (marked > size) throw std::invalid_argument("synthetic space: K > N");
    auto truth = [marked](uint64_t i) { return i < marked; };
    auto charged = [marked, ledger, label](uint64_t i) {
        ledger->charge_classical(label);
        return i < marked;
    };
    SearchSpace s(size, truth, charged, ledger, label);
    s.marked_count_ = marked;
    return s;
}

uint64_t SearchSpace::marked_count() const {
    if (!marked_count_) {
        uint64_t k = 0;
        for (uint64_t i = 0; i < size_; ++i)
            if (truth_(i)) ++k;
        marked_count_ = k;
    }
    return *marked_count_;
}

void SearchSpace::charge_iterations(uint64_t j) {
    if (j > 0) ledger_->charge_grover(label_, j);
}

GroverOutcome grover_run(SearchSpace& space, uint64_t iterations, Rng& rng) {
    GroverOutcome out;
    const uint64_t n = space.size();
    if (n == 0) return out;
    space.charge_iterations(iterations);
    out.iterations_used = iterations;
    const uint64_t marked = space.marked_count();
    const double p = success_probability(n, marked, iterations);
    bool success;
    if (marked == n) success = true;          // no unmarked index to measure
    else if (marked == 0) success = false;
    else success = rng.bernoulli(p);
    uint64_t measured;
    if (success) {
        do { measured = rng.below(n); } while (!space.truth(measured));
    } else {
        do { measured = rng.below(n); } while (space.truth(measured));
    }
    out.verification_queries = 1;
    if (space.marked_test(measured)) out.found = measured;
    return out;
}

GroverOutcome grover_lasvegas(SearchSpace& space, Rng& rng, const LasVegasOptions& opts) {
    GroverOutcome total;
    if (space.size() == 0) return total;
    if (space.size() == 1) {
        // The schedule only ever draws j = 0 here, so an iteration cap could
        // never bind; one verified measurement already decides the space.
        return grover_run(space, 0, rng);
    }
    double m = 1.0;
    const double m_max = std::sqrt(static_cast<double>(space.size()));
    auto charges = [&] {
        return total.iterations_used +
               (opts.cap_includes_verification ? total.verification_queries : 0);
    };
    for (;;) {
        if (opts.iteration_cap && charges() >= *opts.iteration_cap) return total;
        const uint64_t j = rng.below(static_cast<uint64_t>(std::ceil(m)));
        const uint64_t round_cost = j + (opts.cap_includes_verification ? 1 : 0);
        if (opts.iteration_cap && charges() + round_cost > *opts.iteration_cap) {
            // cut mid-search: charge the iterations that fit, no measurement
            const uint64_t rest = *opts.iteration_cap - charges();
            const uint64_t partial = rest < j ? rest : j;
            space.charge_iterations(partial);
            total.iterations_used += partial;
            return total;
        }
        GroverOutcome round = grover_run(space, j, rng);
        total.iterations_used += round.iterations_used;
        total.verification_queries += round.verification_queries;
        if (round.found) {
            total.found = round.found;
            return total;
        }
        m = std::min(m * 1.2, m_max);
    }
}

int emptiness_repetitions(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("emptiness_repetitions: epsilon out of (0,1)");
    // smallest r >= 1 with 3^-r <= epsilon, computed with integer powers so
    // that boundary values like 1/3 do not misround
    double pow3 = 1.0;
    int r = 0;
    while (pow3 * epsilon < 1.0 - 1e-12) {
        pow3 *= 3.0;
        ++r;
        if (r >= 64) break;
    }
    return r < 1 ? 1 : r;
}

std::optional<uint64_t> grover_find_or_empty(SearchSpace& space, double epsilon, Rng& rng) {
    if (space.size() == 0) return std::nullopt;
    const int reps = emptiness_repetitions(epsilon);
    const uint64_t cap = static_cast<uint64_t>(
        std::floor(kEmptinessCapFactor * std::sqrt(static_cast<double>(space.size()))));
    LasVegasOptions opts;
    opts.iteration_cap = cap;
    for (int r = 0; r < reps; ++r) {
        const GroverOutcome out = grover_lasvegas(space, rng, opts);
        if (out.found) return out.found;
    }
    return std::nullopt;
}

}  // namespace qgraph

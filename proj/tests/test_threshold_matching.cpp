#include <doctest.h>

#include <cmath>

#include "qgraph/brute_force.hpp"
#include "qgraph/generators.hpp"
#include "qgraph/threshold_matching.hpp"

using namespace qgraph;

TEST_SUITE("threshold_matching") {

TEST_CASE("edgeless graph returns the empty matching (maximal)") {
    const Graph g(10, {});
    for (int k : {0, 2}) {
        QueryLedger ledger;
        MatrixOracle o(g, ledger);
        Rng rng(3);
        const Matching m = quantum_threshold_maximal_matching(o, k, rng);
        CHECK(m.size() == 0);
        CHECK(ledger.grover(kThresholdLabel) <= threshold_budget(10, k));
    }
}

TEST_CASE("output is always a matching of size at most k+1, within budget") {
    Rng meta(1);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(meta.below(8));
        const uint64_t m_edges = meta.below(pair_count(n) + 1);
        const int k = static_cast<int>(meta.below(4));
        const Graph g = gen_random_graph(n, m_edges, meta.next());
        QueryLedger ledger;
        MatrixOracle o(g, ledger);
        Rng rng(meta.next());
        const Matching m = quantum_threshold_maximal_matching(o, k, rng);
        CHECK(m.size() <= k + 1);
        const auto check = check_matching_properties(g, m.edges());
        CHECK(check.is_matching);
        CHECK(ledger.grover(kThresholdLabel) <= threshold_budget(n, k));
    }
}

TEST_CASE("k+2 disjoint edges: reaches size k+1 with frequency >= 5/6 - 3sigma") {
    const int k = 3;
    const Graph g = gen_disjoint_edges(2 * (k + 2), k + 2, 5);
    const int trials = 400;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
        QueryLedger ledger;
        MatrixOracle o(g, ledger);
        Rng rng = Rng::stream(77, t);
        const Matching m = quantum_threshold_maximal_matching(o, k, rng);
        const auto check = check_matching_properties(g, m.edges());
        REQUIRE(check.is_matching);
        if (m.size() == k + 1 || check.is_maximal) ++good;
    }
    const double sigma = std::sqrt((5.0 / 6.0) * (1.0 / 6.0) / trials);
    CHECK(static_cast<double>(good) / trials >= 5.0 / 6.0 - 3 * sigma);
}

TEST_CASE("K4 with k=2 yields a maximal matching of size 2 almost always") {
    const Graph k4 = gen_random_graph(4, 6, 0);
    const int trials = 300;
    int good = 0;
    for (int t = 0; t < trials; ++t) {
        QueryLedger ledger;
        MatrixOracle o(k4, ledger);
        Rng rng = Rng::stream(88, t);
        const Matching m = quantum_threshold_maximal_matching(o, 2, rng);
        const auto check = check_matching_properties(k4, m.edges());
        if (check.is_matching && check.is_maximal && m.size() == 2) ++good;
    }
    const double sigma = std::sqrt((5.0 / 6.0) * (1.0 / 6.0) / trials);
    CHECK(static_cast<double>(good) / trials >= 5.0 / 6.0 - 3 * sigma);
}

TEST_CASE("every added edge had both endpoints free at insertion time") {
    // equivalently: the output is a matching of the true graph, already
    // covered above; here we re-run with a dense graph and check edges exist
    const Graph g = gen_random_graph(12, 40, 9);
    QueryLedger ledger;
    MatrixOracle o(g, ledger);
    Rng rng(4);
    const Matching m = quantum_threshold_maximal_matching(o, 4, rng);
    for (const auto& [u, v] : m.edges()) CHECK(g.has_edge(u, v));
}

TEST_CASE("unbudgeted variant: single edge, edgeless, mean iteration bound") {
    {
        const Graph g(2, {{0, 1}});
        QueryLedger ledger;
        MatrixOracle o(g, ledger);
        Rng rng(5);
        const auto run = threshold_matching_unbudgeted(o, 0, rng);
        CHECK(run.matching.size() == 1);
    }
    {
        const Graph g(6, {});
        QueryLedger ledger;
        MatrixOracle o(g, ledger);
        Rng rng(6);
        const auto run = threshold_matching_unbudgeted(o, 3, rng);
        CHECK(run.matching.size() == 0);
        CHECK(run.iterations == 0);  // stop condition held immediately
    }
    {
        // perfect matching on n=20 (10 edges), k=9: mean <= 16 n sqrt(k+1)
        const Graph g = gen_disjoint_edges(20, 10, 1);
        const int trials = 300;
        double sum = 0;
        for (int t = 0; t < trials; ++t) {
            QueryLedger ledger;
            MatrixOracle o(g, ledger);
            Rng rng = Rng::stream(99, t);
            const auto run = threshold_matching_unbudgeted(o, 9, rng);
            CHECK(run.matching.size() == 10);
            sum += static_cast<double>(run.iterations);
        }
        CHECK(sum / trials <= 16.0 * 20.0 * std::sqrt(10.0));
    }
}

TEST_CASE("alternative accounting: verification queries count against the budget") {
    const Graph g = gen_disjoint_edges(12, 2, 3);
    QueryLedger ledger;
    MatrixOracle o(g, ledger);
    Rng rng(7);
    ThresholdOptions opts;
    opts.charge_verification_to_budget = true;
    const Matching m = quantum_threshold_maximal_matching(o, 3, rng, opts);
    CHECK(check_matching_properties(g, m.edges()).is_matching);
    CHECK(ledger.grover(kThresholdLabel) + ledger.classical(kThresholdLabel) <=
          threshold_budget(12, 3));
}

}  // TEST_SUITE

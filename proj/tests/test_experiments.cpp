#include <doctest.h>

#include <sstream>

#include "qgraph/experiments.hpp"
#include "qgraph/generators.hpp"

using namespace qgraph;

namespace {

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("parse_range forms") {
    CHECK(parse_range("4") == std::vector<int>{4});
    CHECK(parse_range("2:4") == std::vector<int>{2, 3, 4});
    CHECK(parse_range("20:60:20") == std::vector<int>{20, 40, 60});
    CHECK_THROWS_AS(parse_range("5:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("1:5:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("abc"), std::invalid_argument);
}

TEST_CASE("sweep: row count contract and determinism") {
    SweepConfig config;
    config.problem = "vc";
    config.family = "random";
    config.n_values = parse_range("6:10:2");  // 3 values
    config.k_values = parse_range("1:2");     // 2 values
    config.trials = 4;
    config.seed = 123;
    config.random_edges = 6;
    const std::string a = sweep_csv(config);
    CHECK(count_lines(a) == 1 + 3 * 2 * 4);
    const std::string b = sweep_csv(config);
    CHECK(a == b);  // byte-identical

    config.trials = 0;
    const std::string header_only = sweep_csv(config);
    CHECK(count_lines(header_only) == 1);
}

TEST_CASE("sweep: matching and maxmatching run and stay in schema") {
    for (const char* problem : {"matching", "maxmatching"}) {
        SweepConfig config;
        config.problem = problem;
        config.family = "disjoint-edges";
        config.n_values = {8};
        config.k_values = {2};
        config.trials = 3;
        config.seed = 9;
        const std::string csv = sweep_csv(config);
        CHECK(count_lines(csv) == 4);
        std::istringstream in(csv);
        std::string header;
        std::getline(in, header);
        CHECK(header ==
              "schema,problem,family,n,k,trial,trial_seed,decision,agreement,"
              "grover_iterations,classical_queries,modeled_queries,flag_alg1_failure,"
              "flag_kernel_property_failure,flag_search_error,flag_witness_downgraded");
    }
}

TEST_CASE("sweep rejects unknown problems and families") {
    SweepConfig config;
    config.problem = "nope";
    config.family = "random";
    config.n_values = {6};
    config.k_values = {1};
    config.trials = 1;
    config.random_edges = 3;
    CHECK_THROWS_AS(sweep_csv(config), std::invalid_argument);
    config.problem = "vc";
    config.family = "nope";
    CHECK_THROWS_AS(sweep_csv(config), std::invalid_argument);
    config.family = "random";
    config.random_edges = -1;  // required parameter missing
    CHECK_THROWS_AS(sweep_csv(config), std::invalid_argument);
}

TEST_CASE("solve_instance: decisions and exit codes") {
    const Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    const auto no = solve_instance("vc", tri, 1, 7, "matrix");
    CHECK(no.exit_code == 1);
    CHECK(no.report.find("decision: NO") != std::string::npos);

    const Graph p3(3, {{0, 1}, {1, 2}});
    const auto yes = solve_instance("vc", p3, 1, 7, "matrix");
    CHECK(yes.exit_code == 0);
    CHECK(yes.report.find("witness: 1") != std::string::npos);
    CHECK(yes.report.find("alg1.grover") != std::string::npos);  // ledger printed

    const auto list_yes = solve_instance("vc", p3, 1, 7, "list");
    CHECK(list_yes.exit_code == 0);

    const auto bad = solve_instance("nope", tri, 1, 7, "matrix");
    CHECK(bad.exit_code == 2);
    const auto bad_model = solve_instance("matching", tri, 1, 7, "list");
    CHECK(bad_model.exit_code == 2);

    const auto mm = solve_instance("maxmatching", tri, 0, 7, "matrix");
    CHECK(mm.exit_code == 0);
    CHECK(mm.report.find("matching size: 1") != std::string::npos);
}

TEST_CASE("lowerbound csv: frozen values for the n=9 k=2 matching family") {
    const std::string csv = lowerbound_csv("vc-matchings", 9, 2, 3);
    CHECK(csv.find("vc-matchings,9,2,0,378,1260,10,3,1,") != std::string::npos);
    CHECK(csv.find(",1/10\n") != std::string::npos);
    CHECK_THROWS(lowerbound_csv("vc-matchings", 3, 1, 3));  // infeasible
    const std::string cl = lowerbound_csv("cliques", 6, 2, 3);
    CHECK(cl.find("cliques,6,2,3,") != std::string::npos);
}

TEST_CASE("kernel command: star, no-instance marker, determinism") {
    std::vector<Edge> star_edges;
    for (int i = 1; i <= 5; ++i) star_edges.push_back({0, i});
    const Graph star(6, star_edges);
    const auto out = kernel_instance(star, 1, 5);
    CHECK(out.exit_code == 0);
    CHECK(out.file_contents.find("U: 0\n") != std::string::npos);
    CHECK(out.file_contents.find("k': 0\n") != std::string::npos);
    CHECK(out.report.find("kernel edges: 0") != std::string::npos);
    const auto again = kernel_instance(star, 1, 5);
    CHECK(again.file_contents == out.file_contents);
    CHECK(again.report == out.report);

    const Graph dj = gen_disjoint_edges(6, 3, 2);
    const auto no = kernel_instance(dj, 2, 5);
    CHECK(no.exit_code == 1);
    CHECK(no.file_contents == "NO-INSTANCE\n");

    const Graph empty(4, {});
    const auto triv = kernel_instance(empty, 0, 5);
    CHECK(triv.exit_code == 0);
    CHECK(triv.file_contents.find("k': 0\n") != std::string::npos);
}

}  // TEST_SUITE

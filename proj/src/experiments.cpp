#include "qgraph/experiments.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qgraph/brute_force.hpp"
#include "qgraph/decision_tree.hpp"
#include "qgraph/generators.hpp"
#include "qgraph/k_matching.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/lower_bounds.hpp"
#include "qgraph/oracle.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/vertex_cover.hpp"

namespace qgraph {

namespace {

std::string join_vertices(const std::vector<int>& vs) {
    std::ostringstream out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ' ';
        out << vs[i];
    }
    return out.str();
}

std::string join_edges(const std::vector<Edge>& es) {
    std::ostringstream out;
    for (size_t i = 0; i < es.size(); ++i) {
        if (i) out << ' ';
        out << '(' << es[i].first << ',' << es[i].second << ')';
    }
    return out.str();
}

}  // namespace

SolveOutcome solve_instance(const std::string& problem, const Graph& g, int k, uint64_t seed,
                            const std::string& model) {
    SolveOutcome out;
    if (model != "matrix" && model != "list") {
        out.report = "unknown model: " + model + "\n";
        return out;
    }
    if (model == "list" && problem != "vc") {
        out.report = "the list model is only available for problem vc\n";
        return out;
    }
    QueryLedger ledger;
    Rng rng = Rng::stream(seed, 0);
    std::ostringstream report;

    if (problem == "vc") {
        bool yes;
        std::vector<int> cover;
        if (model == "list") {
            ListOracle oracle(g, ledger);
            const auto run = list_model_vertex_cover(oracle, k, rng);
            yes = run.yes;
            cover = run.cover;
        } else {
            MatrixOracle oracle(g, ledger);
            const auto run = quantum_vertex_cover(oracle, k, rng);
            yes = run.yes;
            cover = run.cover;
        }
        report << "problem: vc  k: " << k << "  model: " << model << '\n';
        report << "decision: " << (yes ? "YES" : "NO") << '\n';
        if (yes) report << "witness: " << join_vertices(cover) << '\n';
        out.exit_code = yes ? 0 : 1;
    } else if (problem == "matching") {
        MatrixOracle oracle(g, ledger);
        const auto run = quantum_k_matching(oracle, k, rng);
        report << "problem: matching  k: " << k << "  model: matrix\n";
        report << "decision: " << (run.yes ? "YES" : "NO") << '\n';
        if (run.yes) report << "witness: " << join_edges(run.matching.edges()) << '\n';
        out.exit_code = run.yes ? 0 : 1;
    } else if (problem == "maxmatching") {
        MatrixOracle oracle(g, ledger);
        const auto run = quantum_maximum_matching(oracle, rng);
        report << "problem: maxmatching  model: matrix\n";
        report << "matching size: " << run.matching.size() << '\n';
        report << "witness: " << join_edges(run.matching.edges()) << '\n';
        out.exit_code = 0;
    } else {
        out.report = "unknown problem: " + problem + "\n";
        return out;
    }
    report << "ledger:\n" << ledger.to_csv();
    out.report = report.str();
    return out;
}

std::vector<int> parse_range(const std::string& text) {
    int lo = 0, hi = 0, step = 1;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo)) throw std::invalid_argument("bad range: " + text);
    hi = lo;
    if (in >> c1) {
        if (c1 != ':' || !(in >> hi)) throw std::invalid_argument("bad range: " + text);
        if (in >> c2) {
            if (c2 != ':' || !(in >> step) || step <= 0)
                throw std::invalid_argument("bad range: " + text);
        }
    }
    if (hi < lo) throw std::invalid_argument("bad range: " + text);
    std::vector<int> out;
    for (int v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

std::string sweep_csv(const SweepConfig& config) {
    std::ostringstream csv;
    csv << "schema,problem,family,n,k,trial,trial_seed,decision,agreement,"
           "grover_iterations,classical_queries,modeled_queries,"
           "flag_alg1_failure,flag_kernel_property_failure,flag_search_error,"
           "flag_witness_downgraded\n";

    for (int n : config.n_values) {
        for (int k : config.k_values) {
            for (int trial = 0; trial < config.trials; ++trial) {
                Rng rng = Rng::stream(config.seed, static_cast<uint64_t>(n),
                                      static_cast<uint64_t>(k), static_cast<uint64_t>(trial));
                const uint64_t trial_seed = rng.next();  // seeds the instance generator

                Graph g;
                if (config.family == "random") {
                    if (config.random_edges < 0)
                        throw std::invalid_argument("family random needs an edge count");
                    const uint64_t m = std::min<uint64_t>(
                        static_cast<uint64_t>(config.random_edges), pair_count(n));
                    g = gen_random_graph(n, m, trial_seed);
                } else if (config.family == "disjoint-edges") {
                    const int j = std::max(0, std::min(k + config.disjoint_extra, n / 2));
                    g = gen_disjoint_edges(n, j, trial_seed);
                } else if (config.family == "cliques") {
                    const int t = config.clique_size;
                    const int c = std::min(k / (t - 1) + 1, n / t);
                    g = gen_disjoint_cliques(n, c, t, trial_seed);
                } else {
                    throw std::invalid_argument("unknown family: " + config.family);
                }

                QueryLedger ledger;
                bool decision = false;
                bool alg1_failure = false, kernel_failure = false, search_error = false,
                     downgraded = false;
                std::string agreement = "na";
                const bool in_oracle_range = n <= config.oracle_limit;

                if (config.problem == "vc") {
                    MatrixOracle oracle(g, ledger);
                    const auto run = quantum_vertex_cover(oracle, k, rng);
                    decision = run.yes;
                    alg1_failure = !run.matching_maximal && !run.no_via_matching_gate;
                    kernel_failure = !run.kernel_properties_ok;
                    downgraded = run.witness_downgraded;
                    if (in_oracle_range) {
                        const bool truth = brute_min_vertex_cover(g).size <= k;
                        agreement = (decision == truth) ? "1" : "0";
                    }
                } else if (config.problem == "matching") {
                    MatrixOracle oracle(g, ledger);
                    const auto run = quantum_k_matching(oracle, k, rng);
                    decision = run.yes;
                    alg1_failure = run.alg1_failure;
                    search_error = run.search_errors > 0;
                    if (in_oracle_range) {
                        const bool truth = brute_max_matching(g).size >= k;
                        agreement = (decision == truth) ? "1" : "0";
                    }
                } else if (config.problem == "maxmatching") {
                    MatrixOracle oracle(g, ledger);
                    const auto run = quantum_maximum_matching(oracle, rng);
                    decision = true;
                    alg1_failure = run.inner.alg1_failure;
                    search_error = run.inner.search_errors > 0;
                    if (in_oracle_range) {
                        const bool truth = brute_max_matching(g).size == run.matching.size();
                        agreement = truth ? "1" : "0";
                    }
                } else {
                    throw std::invalid_argument("unknown problem: " + config.problem);
                }

                csv << kCsvSchemaVersion << ',' << config.problem << ',' << config.family << ','
                    << n << ',' << k << ',' << trial << ',' << trial_seed << ','
                    << (decision ? "yes" : "no") << ',' << agreement << ','
                    << ledger.total_grover() << ',' << ledger.total_classical() << ','
                    << ledger.total_modeled() << ',' << (alg1_failure ? 1 : 0) << ','
                    << (kernel_failure ? 1 : 0) << ',' << (search_error ? 1 : 0) << ','
                    << (downgraded ? 1 : 0) << '\n';
            }
        }
    }
    return csv.str();
}

std::string lowerbound_csv(const std::string& family, int n, int k, int t) {
    AdversaryInstance inst;
    if (family == "vc-matchings") {
        inst = build_matching_family_vc(n, k);
    } else if (family == "km-matchings") {
        inst = build_matching_family_km(n, k);
    } else if (family == "cliques") {
        inst = build_clique_family(n, k, t);
    } else if (family == "cycles") {
        inst = build_cycle_family(n, k);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    const auto q = adversary_quantities(inst);
    std::ostringstream csv;
    csv << "schema,family,n,k,t,x_count,y_count,m,m_prime,l_max,bound,v\n";
    csv << kCsvSchemaVersion << ',' << inst.family << ',' << inst.n << ',' << inst.k << ','
        << inst.t << ',' << inst.xs.size() << ',' << inst.ys.size() << ',' << q.m << ','
        << q.m_prime << ',' << q.l_max << ',' << q.bound << ',' << q.v.num << '/' << q.v.den
        << '\n';
    return csv.str();
}

KernelOutcome kernel_instance(const Graph& g, int k, uint64_t seed) {
    KernelOutcome out;
    QueryLedger ledger;
    MatrixOracle oracle(g, ledger);
    Rng rng = Rng::stream(seed, 0);
    const auto kr = kernelize(oracle, k, rng);
    std::ostringstream report;
    if (kr.no_instance) {
        out.file_contents = "NO-INSTANCE\n";
        report << "NO-INSTANCE (matching of size " << kr.matching.size() << " > k)\n";
        out.exit_code = 1;
    } else {
        const Kernel& kernel = *kr.kernel;
        out.file_contents = kernel_to_text(kernel);
        report << "kernel edges: " << kernel.reduced.edge_count() << '\n'
               << "forced |U|: " << kernel.forced.size() << '\n'
               << "k': " << kernel.k_prime << '\n'
               << "edge bound 2k^2: " << 2 * k * k << "  satisfied: "
               << (kernel.reduced.edge_count() <= 2 * k * k ? "yes" : "no") << '\n';
        out.exit_code = 0;
    }
    report << "ledger:\n" << ledger.to_csv();
    out.report = report.str();
    return out;
}

}  // namespace qgraph

// Acceptance suite: one externally checkable criterion per function, each
// printing a single PASS/FAIL line. Statistical thresholds and runtime caps
// are pinned in code; a FAIL exits nonzero.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qgraph/brute_force.hpp"
#include "qgraph/decision_tree.hpp"
#include "qgraph/experiments.hpp"
#include "qgraph/generators.hpp"
#include "qgraph/grover.hpp"
#include "qgraph/k_matching.hpp"
#include "qgraph/ledger.hpp"
#include "qgraph/lower_bounds.hpp"
#include "qgraph/oracle.hpp"
#include "qgraph/rng.hpp"
#include "qgraph/threshold_matching.hpp"
#include "qgraph/vertex_cover.hpp"

using namespace qgraph;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    const char* name;
    bool (*run)(std::ostream& detail);
    double runtime_limit_seconds;  // 0 = no stated limit
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
    uint64_t failed_checks = 0;
    uint64_t total_checks = 0;
    void expect(bool ok) {
        ++total_checks;
        if (!ok) ++failed_checks;
    }
};

// ---------------------------------------------------------------- criterion 1

bool criterion1_grover_exactness(std::ostream& detail) {
    const int trials = 10000;
    Tally t;
    for (uint64_t space : {uint64_t{4}, uint64_t{64}, uint64_t{1024}}) {
        for (uint64_t marked : {uint64_t{0}, uint64_t{1}, space / 4, space}) {
            for (uint64_t j : {uint64_t{0}, uint64_t{1}, uint64_t{3}, uint64_t{10}}) {
                QueryLedger ledger;
                const auto label = ledger.label("c1");
                SearchSpace s = SearchSpace::synthetic(space, marked, &ledger, label);
                const double p = success_probability(space, marked, j);
                Rng rng = Rng::stream(0xC1, space, marked, j);
                int hits = 0;
                for (int i = 0; i < trials; ++i)
                    if (grover_run(s, j, rng).found) ++hits;
                const double freq = static_cast<double>(hits) / trials;
                const double sigma = std::sqrt(p * (1.0 - p) / trials);
                t.expect(std::abs(freq - p) <= 3.0 * sigma + 1e-12);
                if (space == 4 && marked == 1 && j == 1) t.expect(freq == 1.0);
            }
        }
    }
    detail << t.total_checks - t.failed_checks << "/" << t.total_checks
           << " grid cells within 3 binomial sigma";
    return t.failed_checks == 0;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2_bbht_expectation(std::ostream& detail) {
    const int trials = 10000;
    bool ok = true;
    detail << "means vs 8*sqrt(N/K):";
    for (uint64_t marked : {uint64_t{1}, uint64_t{4}, uint64_t{16}, uint64_t{64}}) {
        QueryLedger ledger;
        const auto label = ledger.label("c2");
        SearchSpace s = SearchSpace::synthetic(1024, marked, &ledger, label);
        Rng rng = Rng::stream(0xC2, marked);
        double sum = 0, sumsq = 0;
        for (int i = 0; i < trials; ++i) {
            const auto out = grover_lasvegas(s, rng);
            if (!out.found) return false;
            const double x = static_cast<double>(out.iterations_used);
            sum += x;
            sumsq += x * x;
        }
        const double mean = sum / trials;
        const double var = (sumsq - sum * sum / trials) / (trials - 1);
        const double slack = 3.0 * std::sqrt(var / trials);
        const double bound = 8.0 * std::sqrt(1024.0 / static_cast<double>(marked));
        detail << " K=" << marked << ": " << mean << "<=" << bound;
        if (mean > bound + slack) ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 3

struct Alg1Stats {
    int trials = 0;
    int good = 0;          // maximal or size k+1
    bool always_matching = true;
    bool budget_respected = true;
};

Alg1Stats run_alg1_batch(const Graph& g, int k, int trials, uint64_t seed) {
    Alg1Stats st;
    st.trials = trials;
    const uint64_t budget = threshold_budget(g.vertex_count(), k);
    for (int i = 0; i < trials; ++i) {
        QueryLedger ledger;
        MatrixOracle oracle(g, ledger);
        Rng rng = Rng::stream(seed, i);
        const Matching m = quantum_threshold_maximal_matching(oracle, k, rng);
        const auto check = check_matching_properties(g, m.edges());
        if (!check.is_matching) st.always_matching = false;
        if (check.is_maximal || m.size() == k + 1) ++st.good;
        if (ledger.grover(kThresholdLabel) > budget) st.budget_respected = false;
    }
    return st;
}

bool criterion3_threshold_matching(std::ostream& detail) {
    const int trials = 1000;
    bool ok = true;

    struct Inst {
        const char* name;
        Graph g;
        int k;
    };
    std::vector<Inst> instances;
    instances.push_back({"disjoint-edges", gen_disjoint_edges(10, 5, 31), 3});  // k+2 edges
    instances.push_back({"K4", gen_random_graph(4, 6, 0), 2});
    instances.push_back({"random-n40", gen_random_graph(40, 60, 7), 4});
    instances.push_back({"random-n60", gen_random_graph(60, 90, 8), 4});

    for (const auto& inst : instances) {
        const auto st = run_alg1_batch(inst.g, inst.k, trials, 0xC3);
        const double freq = static_cast<double>(st.good) / st.trials;
        const double sigma = std::sqrt((5.0 / 6.0) * (1.0 / 6.0) / st.trials);
        detail << " " << inst.name << ": freq=" << freq;
        if (!st.always_matching || !st.budget_respected) ok = false;
        if (freq < 5.0 / 6.0 - 3.0 * sigma) ok = false;
    }

    // unbudgeted variant on the disjoint-edge family (perfect matching n=20)
    const Graph pm = gen_disjoint_edges(20, 10, 5);
    double sum = 0;
    for (int i = 0; i < trials; ++i) {
        QueryLedger ledger;
        MatrixOracle oracle(pm, ledger);
        Rng rng = Rng::stream(0xC3A, i);
        const auto run = threshold_matching_unbudgeted(oracle, 9, rng);
        if (run.matching.size() != 10) ok = false;
        sum += static_cast<double>(run.iterations);
    }
    const double mean = sum / trials;
    const double proof_bound = 16.0 * 20.0 * std::sqrt(10.0);
    detail << " unbudgeted-mean=" << mean << "<=" << proof_bound;
    if (mean > proof_bound) ok = false;
    return ok;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4_kernel_invariants(std::ostream& detail) {
    const int runs = 10000;
    Rng meta(0xC4);
    uint64_t kernels = 0;
    for (int i = 0; i < runs; ++i) {
        const int n = 4 + static_cast<int>(meta.below(13));
        const uint64_t m_edges = meta.below(pair_count(n) + 1);
        const int k = static_cast<int>(meta.below(5));
        const Graph g = gen_random_graph(n, m_edges, meta.next());
        QueryLedger ledger;
        MatrixOracle oracle(g, ledger);
        Rng rng(meta.next());
        const auto kr = kernelize(oracle, k, rng);
        if (kr.no_instance) continue;
        ++kernels;
        const Kernel& kernel = *kr.kernel;
        if (kernel.reduced.edge_count() > 2 * k * k) return false;
        std::vector<char> in_u(n, 0);
        for (int v : kernel.forced) in_u[v] = 1;
        std::vector<char> in_m(n, 0);
        for (int v : kernel.source_matching.vertices()) in_m[v] = 1;
        for (const auto& [u, v] : kernel.reduced.edges()) {
            if (in_u[u] || in_u[v]) return false;
            if (!in_m[u] && !in_m[v]) return false;
        }
        for (int v : kernel.source_matching.vertices())
            if (!in_u[v] && kernel.reduced.degree(v) > k) return false;
    }
    detail << kernels << " kernels over " << runs << " randomized runs, zero violations";
    return true;
}

// ----------------------------------------------------- criteria 5 and 6 (grid)

// Exact binomial: P(Bin(n, p) <= t)
double binomial_cdf(int n, double p, int t) {
    double pmf = std::pow(1.0 - p, n);  // P(X = 0)
    double cdf = 0.0;
    for (int i = 0; i <= t; ++i) {
        cdf += pmf;
        pmf *= (static_cast<double>(n - i) / (i + 1)) * (p / (1.0 - p));
    }
    return std::min(cdf, 1.0);
}

struct GridResult {
    uint64_t runs = 0;
    uint64_t agreements = 0;
    uint64_t instances = 0;
    uint64_t failed_instances = 0;   // exact binomial test rejections at 99%
    uint64_t hard_violations = 0;    // unconditional assertions
};

// All labeled graphs on 1..6 vertices, k in 0..3, seeds_per_instance seeds.
// run_one returns {agreed, violated} for one (graph, k, seed).
template <typename RunOne>
GridResult enumeration_grid(int seeds_per_instance, uint64_t stream_tag, RunOne run_one) {
    struct Job {
        int n;
        uint64_t bits;
    };
    std::vector<Job> jobs;
    for (int n = 1; n <= 6; ++n)
        for (uint64_t bits = 0; bits < (1ULL << pair_count(n)); ++bits)
            jobs.push_back({n, bits});

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    std::vector<GridResult> partial(workers);

    auto work = [&](unsigned wid) {
        GridResult& res = partial[wid];
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= jobs.size()) break;
            const auto [n, bits] = jobs[idx];
            std::vector<Edge> edges;
            for (uint64_t r = 0; r < pair_count(n); ++r)
                if (bits & (1ULL << r)) edges.push_back(pair_unrank(n, r));
            const Graph g(n, std::move(edges));
            const uint64_t graph_uid = (static_cast<uint64_t>(n) << 32) | bits;
            for (int k = 0; k <= 3; ++k) {
                int agreed = 0;
                for (int s = 0; s < seeds_per_instance; ++s) {
                    Rng rng = Rng::stream(stream_tag, graph_uid, static_cast<uint64_t>(k),
                                          static_cast<uint64_t>(s));
                    const auto [agree, violation] = run_one(g, k, rng);
                    ++res.runs;
                    if (agree) {
                        ++agreed;
                        ++res.agreements;
                    }
                    if (violation) ++res.hard_violations;
                }
                ++res.instances;
                if (binomial_cdf(seeds_per_instance, 2.0 / 3.0, agreed) < 0.01)
                    ++res.failed_instances;
            }
        }
    };

    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();

    GridResult total;
    for (const auto& r : partial) {
        total.runs += r.runs;
        total.agreements += r.agreements;
        total.instances += r.instances;
        total.failed_instances += r.failed_instances;
        total.hard_violations += r.hard_violations;
    }
    return total;
}

bool criterion5_vertex_cover_grid(std::ostream& detail) {
    const auto res = enumeration_grid(
        50, 0xC5, [](const Graph& g, int k, Rng& rng) -> std::pair<bool, bool> {
            QueryLedger ledger;
            MatrixOracle oracle(g, ledger);
            const auto run = quantum_vertex_cover(oracle, k, rng);
            bool violation = false;
            if (run.yes &&
                (!is_vertex_cover(g, run.cover) || static_cast<int>(run.cover.size()) > k))
                violation = true;
            const bool truth = brute_min_vertex_cover(g).size <= k;
            return {run.yes == truth, violation};
        });
    const double aggregate = static_cast<double>(res.agreements) / res.runs;
    detail << res.runs << " runs, aggregate agreement " << aggregate << ", "
           << res.failed_instances << "/" << res.instances << " instances rejected, "
           << res.hard_violations << " witness violations";
    return res.hard_violations == 0 && res.failed_instances == 0 && aggregate >= 0.95;
}

bool criterion6_k_matching_grid(std::ostream& detail) {
    std::atomic<uint64_t> structure_violations{0};
    const auto res = enumeration_grid(
        50, 0xC6, [&](const Graph& g, int k, Rng& rng) -> std::pair<bool, bool> {
            QueryLedger ledger;
            MatrixOracle oracle(g, ledger);
            const auto run = quantum_k_matching(oracle, k, rng);
            bool violation = false;
            // potential drops by exactly one per call and stays in [0, 2k];
            // call count is bounded by 2k (holds on every run here)
            if (!run.potential_ok || run.extend_calls > 2 * k) {
                violation = true;
                ++structure_violations;
            }
            if (run.yes && run.matching.size() < k) violation = true;
            if (run.search_errors == 0 && !run.alg1_failure && !run.f_exact) violation = true;
            const bool truth = brute_max_matching(g).size >= k;
            return {run.yes == truth, violation};
        });
    const double aggregate = static_cast<double>(res.agreements) / res.runs;
    detail << res.runs << " runs, aggregate agreement " << aggregate << ", "
           << res.failed_instances << "/" << res.instances << " instances rejected, "
           << structure_violations.load() << " potential-structure violations";
    return res.hard_violations == 0 && res.failed_instances == 0 && aggregate >= 0.95;
}

// ---------------------------------------------------------------- criterion 7

// least-squares slope of log(mean grover iterations) against log n. The
// instance families keep both algorithms inside the linear-in-n regime: a
// randomly placed K6 for the vertex-cover sweep (its matched vertices all
// reach degree k+1, so the classification loop terminates by absorption
// instead of burning its sqrt(n) budget) and k-1 randomly placed disjoint
// edges for the matching sweep (the threshold stage consumes its exact 192n
// budget and the extension stage adds only a small sqrt(n) term).
bool criterion7_scaling_shape(std::ostream& detail) {
    bool ok = true;
    for (const char* problem : {"vc", "matching"}) {
        SweepConfig config;
        config.problem = problem;
        if (std::string(problem) == "vc") {
            config.family = "cliques";
            config.clique_size = 6;  // k + 2
        } else {
            config.family = "disjoint-edges";
            config.disjoint_extra = -1;  // j = k - 1
        }
        config.n_values = parse_range("40:240:40");
        config.k_values = {4};
        config.trials = 100;
        config.seed = 0xC7;
        const std::string csv = sweep_csv(config);

        std::map<int, std::pair<double, int>> per_n;  // n -> (sum grover, count)
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            std::vector<std::string> cells;
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) cells.push_back(cell);
            const int n = std::stoi(cells[3]);
            per_n[n].first += std::stod(cells[9]);
            per_n[n].second += 1;
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int points = 0;
        for (const auto& [n, acc] : per_n) {
            const double x = std::log(static_cast<double>(n));
            const double y = std::log(acc.first / acc.second);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++points;
        }
        const double slope = (points * sxy - sx * sy) / (points * sxx - sx * sx);
        detail << " " << problem << ": slope=" << slope;
        if (!(slope >= 0.9 && slope <= 1.1)) ok = false;
    }
    return ok;
}

// ---------------------------------------------------------------- criterion 8

bool criterion8_adversary_closed_forms(std::ostream& detail) {
    bool ok = true;
    int grid_cells = 0;
    for (int n = 6; n <= 10; ++n) {
        for (int k = 1; k <= 3 && 2 * (k + 1) <= n; ++k) {
            const auto q = adversary_quantities(build_matching_family_vc(n, k));
            const uint64_t closed = static_cast<uint64_t>((n - 2 * k) * (n - 2 * k - 1) / 2);
            if (q.m != closed) ok = false;
            if (q.m_prime != static_cast<uint64_t>(k) + 1) ok = false;
            if (q.max_l_xi > 1 || q.max_l_yi > 1) ok = false;
            ++grid_cells;
        }
    }
    auto binom = [](uint64_t n, uint64_t k) {
        if (k > n) return uint64_t{0};
        uint64_t r = 1;
        for (uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    struct CliqueCell {
        int n, k, t;
    };
    for (const auto& cell : {CliqueCell{6, 2, 3}, CliqueCell{8, 2, 3}, CliqueCell{9, 4, 3},
                             CliqueCell{10, 2, 3}, CliqueCell{8, 1, 2}}) {
        const auto q = adversary_quantities(build_clique_family(cell.n, cell.k, cell.t));
        const int c = cell.k / (cell.t - 1);
        if (q.m != binom(cell.n - c * cell.t, cell.t)) ok = false;
        if (q.max_l_xi > binom(cell.n - c * cell.t - 2, cell.t - 2)) ok = false;
        if (q.max_l_yi > 1) ok = false;
        ++grid_cells;
    }
    // the pinned instance: n=9, k=2
    const auto q92 = adversary_quantities(build_matching_family_vc(9, 2));
    if (!(q92.m == 10 && q92.m_prime == 3 && q92.l_max == 1)) ok = false;
    if (q92.m * q92.m_prime / q92.l_max != 30) ok = false;  // bound = sqrt(30) exactly
    if (!(q92.v.num == 1 && q92.v.den == 10)) ok = false;
    detail << grid_cells << " family cells exact; (9,2): m=" << q92.m << " m'=" << q92.m_prime
           << " l_max=" << q92.l_max << " v=" << q92.v.num << "/" << q92.v.den;
    return ok;
}

// ---------------------------------------------------------------- criterion 9

bool criterion9_guessing_tree_accounting(std::ostream& detail) {
    const int runs = 1000;
    Rng meta(0xC9);
    for (int i = 0; i < runs; ++i) {
        const int n = 2 + static_cast<int>(meta.below(15));
        const uint64_t m_edges = meta.below(pair_count(n) + 1);
        const int k = static_cast<int>(meta.below(5));
        const Graph g = gen_random_graph(n, m_edges, meta.next());

        QueryLedger ledger;
        MatrixOracle mo(g, ledger);
        const auto [mm, ms] = run_classical_maximal_matching(mo);
        const uint64_t p = static_cast<uint64_t>(brute_max_matching(g).size);
        if (ms.mistakes > p) return false;
        if (ms.queries_used > pair_count(n)) return false;

        ListOracle lo(g, ledger, meta.next());
        const auto [lm, ls] = run_list_scan_matching(lo, k);
        if (ls.queries_used > static_cast<uint64_t>(g.edge_count()) + n) return false;
        if (ls.mistakes > static_cast<uint64_t>(k) + 1) return false;
    }
    detail << runs << " random graphs, zero bound violations in both models";
    return true;
}

// --------------------------------------------------------------- criterion 10

std::string run_cli(const std::string& cli, const std::string& args,
                    const std::filesystem::path& stdout_path) {
    const std::string cmd = cli + " " + args + " > " + stdout_path.string() + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    (void)rc;
    std::ifstream in(stdout_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool criterion10_determinism(std::ostream& detail) {
#ifdef QGRAPH_CLI_PATH
    const std::string cli = QGRAPH_CLI_PATH;
#else
    const std::string cli = "./qgraph_cli";
#endif
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qgraph_acceptance";
    fs::create_directories(dir);
    const fs::path g_path = dir / "star.g";
    {
        std::ofstream g(g_path);
        g << "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n";
    }
    bool ok = true;

    const std::string sweep_args = "sweep vc --family random --n 8:12:4 --k 2 --trials 3 "
                                   "--seed 11 --edges 9 --out " + (dir / "s.csv").string();
    run_cli(cli, sweep_args, dir / "so1.txt");
    const std::string sweep1 = slurp(dir / "s.csv");
    run_cli(cli, sweep_args, dir / "so2.txt");
    if (slurp(dir / "s.csv") != sweep1 || sweep1.empty()) ok = false;

    const std::string lb_args = "lowerbound vc-matchings --n 8 --k 2";
    const std::string lb1 = run_cli(cli, lb_args, dir / "lb1.txt");
    const std::string lb2 = run_cli(cli, lb_args, dir / "lb2.txt");
    if (lb1 != lb2 || lb1.empty()) ok = false;

    const std::string kernel_args =
        "kernel " + g_path.string() + " --k 1 --seed 5 --out " + (dir / "k.txt").string();
    const std::string k1 = run_cli(cli, kernel_args, dir / "ko1.txt");
    const std::string kf1 = slurp(dir / "k.txt");
    const std::string k2 = run_cli(cli, kernel_args, dir / "ko2.txt");
    if (k1 != k2 || slurp(dir / "k.txt") != kf1 || kf1.empty()) ok = false;

    const std::string solve_args = "solve vc " + g_path.string() + " --k 1 --seed 3";
    const std::string s1 = run_cli(cli, solve_args, dir / "sv1.txt");
    const std::string s2 = run_cli(cli, solve_args, dir / "sv2.txt");
    if (s1 != s2 || s1.find("ledger:") == std::string::npos) ok = false;

    detail << "sweep/lowerbound/kernel/solve outputs byte-identical across reruns";
    return ok;
}

const Criterion kCriteria[] = {
    {1, "grover-exactness", criterion1_grover_exactness, 30.0},
    {2, "bbht-expectation", criterion2_bbht_expectation, 60.0},
    {3, "threshold-matching", criterion3_threshold_matching, 0.0},
    {4, "kernel-invariants", criterion4_kernel_invariants, 0.0},
    {5, "vertex-cover-grid", criterion5_vertex_cover_grid, 600.0},
    {6, "k-matching-grid", criterion6_k_matching_grid, 0.0},
    {7, "scaling-shape", criterion7_scaling_shape, 900.0},
    {8, "adversary-closed-forms", criterion8_adversary_closed_forms, 300.0},
    {9, "guessing-tree-accounting", criterion9_guessing_tree_accounting, 0.0},
    {10, "determinism", criterion10_determinism, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            only.push_back(std::atoi(argv[++i]));
        } else if (arg == "--list") {
            for (const auto& c : kCriteria)
                std::cout << c.number << " " << c.name << "\n";
            return 0;
        }
    }

    int failures = 0;
    for (const auto& c : kCriteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end())
            continue;
        const auto start = Clock::now();
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << " exception: " << e.what();
            ok = false;
        }
        const double elapsed = seconds_since(start);
        if (c.runtime_limit_seconds > 0 && elapsed > c.runtime_limit_seconds) ok = false;
        std::cout << "criterion " << c.number << " [" << c.name << "] "
                  << (ok ? "PASS" : "FAIL") << " (" << elapsed << "s) " << detail.str()
                  << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

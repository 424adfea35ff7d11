#include "qgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qgraph {

uint64_t pair_count(int n) {
    if (n < 0) throw std::invalid_argument("pair_count: negative n");
    return static_cast<uint64_t>(n) * (n - 1) / 2;
}

uint64_t pair_rank(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v) throw std::invalid_argument("pair_rank: bad pair");
    // pairs (u, *) occupy a block of size n-1-u starting after all blocks of
    // smaller first coordinates
    const uint64_t un = static_cast<uint64_t>(u);
    return un * n - un * (un + 1) / 2 + (v - u - 1);
}

Edge pair_unrank(int n, uint64_t rank) {
    if (rank >= pair_count(n)) throw std::invalid_argument("pair_unrank: rank out of range");
    // walk the first coordinate; block u has n-1-u entries
    uint64_t r = rank;
    for (int u = 0; u < n - 1; ++u) {
        const uint64_t block = static_cast<uint64_t>(n - 1 - u);
        if (r < block) return {u, u + 1 + static_cast<int>(r)};
        r -= block;
    }
    throw std::logic_error("pair_unrank: unreachable");
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second) throw std::invalid_argument("Graph: self-loop");
        if (e.first < 0 || e.second >= n) throw std::invalid_argument("Graph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    edge_bits_.assign((pair_count(n_) + 63) / 64, 0);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        const uint64_t r = pair_rank(n_, u, v);
        edge_bits_[r >> 6] |= (1ULL << (r & 63));
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph::neighbors: vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const uint64_t r = pair_rank(n_, u, v);
    return (edge_bits_[r >> 6] >> (r & 63)) & 1ULL;
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

Graph Graph::from_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    long long m = -1;
    if (!(in >> n >> m) || m < 0) throw std::invalid_argument("graph text: bad header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("graph text: truncated edge list");
        edges.emplace_back(u, v);
    }
    int extra;
    if (in >> extra) throw std::invalid_argument("graph text: trailing tokens");
    return Graph(n, std::move(edges));  // constructor rejects loops/dupes/range
}

Graph Graph::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

Matching::Matching(std::vector<Edge> edges) {
    for (auto e : edges) add(e);
}

void Matching::add(Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second) throw std::invalid_argument("Matching: self-loop");
    if (covers(e.first) || covers(e.second))
        throw std::invalid_argument("Matching: endpoint already matched");
    edges_.push_back(e);
    std::sort(edges_.begin(), edges_.end());
    endpoints_.push_back(e.first);
    endpoints_.push_back(e.second);
    std::sort(endpoints_.begin(), endpoints_.end());
}

bool Matching::covers(int v) const {
    return std::binary_search(endpoints_.begin(), endpoints_.end(), v);
}

std::vector<int> Matching::vertices() const { return endpoints_; }

}  // namespace qgraph

#pragma once

// Random graph models. Every generator is a pure function of its parameters
// and seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace snacap::net {

namespace detail {

/// Maps an index in [0, n(n-1)/2) to the pair (u, v), u < v, in row order.
inline std::pair<Node, Node> pair_from_index(std::uint64_t idx, std::uint64_t n) {
    // Row u holds n-1-u pairs.
    std::uint64_t u = 0;
    std::uint64_t row = n - 1;
    while (idx >= row) {
        idx -= row;
        ++u;
        --row;
    }
    return {static_cast<Node>(u), static_cast<Node>(u + 1 + idx)};
}

inline std::uint64_t pair_key(Node u, Node v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

} // namespace detail

/// G(n, m): m distinct edges drawn uniformly from all node pairs.
inline Graph er_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("er_gnm: n must be >= 1");
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > pairs) throw std::invalid_argument("er_gnm: m exceeds n(n-1)/2");
    Rng rng(seed);
    // Floyd's sampling of m distinct pair indices.
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = pairs - m; j < pairs; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    std::vector<std::pair<Node, Node>> edges;
    edges.reserve(m);
    for (std::uint64_t idx : chosen) edges.push_back(detail::pair_from_index(idx, n));
    return Graph::from_pairs(n, edges);
}

/// G(n, p): each pair is an edge independently with probability p.
inline Graph gilbert_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gilbert_gnp: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gilbert_gnp: p must be in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<Node, Node>> edges;
    for (Node u = 0; u < n; ++u)
        for (Node v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph::from_pairs(n, edges);
}

/// Ring lattice where every node links to its k nearest neighbours (k even),
/// then each lattice edge (u, u+j) is rewired to a uniform non-neighbour of u
/// with probability beta.
inline Graph watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
    if (k % 2 != 0 || k == 0) throw std::invalid_argument("watts_strogatz: k must be even and > 0");
    if (k >= n) throw std::invalid_argument("watts_strogatz: k must be < n");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("watts_strogatz: rewiring probability must be in [0,1]");
    Rng rng(seed);
    std::unordered_set<std::uint64_t> present;
    std::vector<std::pair<Node, Node>> edges;
    for (Node u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= k / 2; ++j) {
            const Node v = (u + j) % n;
            edges.emplace_back(u, v);
            present.insert(detail::pair_key(u, v));
        }
    }
    std::vector<std::size_t> degree(n, k);
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (Node u = 0; u < n; ++u) {
            auto& e = edges[u * (k / 2) + (j - 1)];
            if (!rng.bernoulli(beta)) continue;
            if (degree[u] >= n - 1) continue; // u already adjacent to everyone
            Node w;
            do {
                w = static_cast<Node>(rng.below(n));
            } while (w == u || present.count(detail::pair_key(u, w)));
            present.erase(detail::pair_key(e.first, e.second));
            --degree[e.second];
            e.second = w;
            ++degree[w];
            present.insert(detail::pair_key(u, w));
        }
    }
    return Graph::from_pairs(n, edges);
}

/// Preferential attachment. Starts from a complete graph on m0 nodes; each
/// later node links to m distinct existing nodes chosen with probability
/// proportional to degree (degree + 1 while every degree is still zero).
inline Graph barabasi_albert(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed) {
    if (m < 1 || m > m0 || m0 > n)
        throw std::invalid_argument("barabasi_albert: need 1 <= m <= m0 <= n");
    Rng rng(seed);
    std::vector<std::pair<Node, Node>> edges;
    // Each edge endpoint appears once, so a uniform draw is degree-proportional.
    std::vector<Node> endpoints;
    for (Node u = 0; u < m0; ++u)
        for (Node v = u + 1; v < m0; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<Node> targets;
    for (Node v = m0; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            Node t = endpoints.empty() ? static_cast<Node>(rng.below(v))
                                       : endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (Node t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::from_pairs(n, edges);
}

enum class GraphModel { er_gnm, gilbert_gnp, watts_strogatz, barabasi_albert };

struct GeneratorParams {
    std::size_t n = 0;
    std::size_t m = 0;      // er_gnm edges; barabasi_albert links per new node
    double p = 0.0;         // gilbert_gnp edge probability; watts_strogatz rewiring
    std::size_t k = 0;      // watts_strogatz lattice degree
    std::size_t m0 = 0;     // barabasi_albert seed clique size
};

inline Graph generate(GraphModel model, const GeneratorParams& prm, std::uint64_t seed) {
    switch (model) {
    case GraphModel::er_gnm: return er_gnm(prm.n, prm.m, seed);
    case GraphModel::gilbert_gnp: return gilbert_gnp(prm.n, prm.p, seed);
    case GraphModel::watts_strogatz: return watts_strogatz(prm.n, prm.k, prm.p, seed);
    case GraphModel::barabasi_albert: return barabasi_albert(prm.n, prm.m0, prm.m, seed);
    }
    throw std::invalid_argument("unknown graph model");
}

inline std::optional<GraphModel> parse_graph_model(std::string_view s) {
    if (s == "er_gnm") return GraphModel::er_gnm;
    if (s == "gilbert_gnp") return GraphModel::gilbert_gnp;
    if (s == "watts_strogatz") return GraphModel::watts_strogatz;
    if (s == "barabasi_albert") return GraphModel::barabasi_albert;
    return std::nullopt;
}

} // namespace snacap::net

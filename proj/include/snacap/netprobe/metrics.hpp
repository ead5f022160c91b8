#pragma once

// Structural descriptors: degree statistics, clustering, path lengths,
// components, cores, quasi-clique density and signed-triangle balance.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace snacap::net {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Hop distances from `source`; kUnreachable where no path exists.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Node source) {
    require_node(g, source);
    std::vector<std::size_t> dist(g.node_count(), kUnreachable);
    std::queue<Node> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const Node u = q.front();
        q.pop();
        for (Node w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

/// Component id per node; ids are assigned in order of each component's
/// smallest node.
inline std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr) {
    std::vector<std::size_t> comp(g.node_count(), kUnreachable);
    std::size_t next = 0;
    for (Node s = 0; s < g.node_count(); ++s) {
        if (comp[s] != kUnreachable) continue;
        std::vector<Node> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            const Node u = stack.back();
            stack.pop_back();
            for (Node w : g.neighbors(u)) {
                if (comp[w] == kUnreachable) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
            for (Node w : g.in_neighbors(u)) {
                if (comp[w] == kUnreachable) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

inline std::size_t component_count(const Graph& g) {
    std::size_t c = 0;
    connected_components(g, &c);
    return c;
}

inline std::size_t triangle_count(const Graph& g) {
    require_undirected(g, "triangle_count");
    std::size_t t = 0;
    for (const auto& e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        // Count common neighbours w > v so each triangle u<v<w is seen once.
        auto ia = std::upper_bound(a.begin(), a.end(), e.v);
        auto ib = std::upper_bound(b.begin(), b.end(), e.v);
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib)
                ++ia;
            else if (*ib < *ia)
                ++ib;
            else {
                ++t;
                ++ia;
                ++ib;
            }
        }
    }
    return t;
}

/// Edges among the neighbours of v over C(deg, 2); 0 when deg < 2.
inline double local_clustering(const Graph& g, Node v) {
    require_undirected(g, "local_clustering");
    require_node(g, v);
    auto nb = g.neighbors(v);
    const std::size_t d = nb.size();
    if (d < 2) return 0.0;
    std::size_t links = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (g.has_edge(nb[i], nb[j])) ++links;
    return static_cast<double>(links) / (static_cast<double>(d) * (d - 1) / 2.0);
}

struct MetricsReport {
    /// degree_histogram[k] = number of nodes with degree k.
    std::vector<std::size_t> degree_histogram;
    double mean_degree = 0.0;
    double global_clustering = 0.0;
    double average_path_length = 0.0;
    std::size_t diameter = 0;
    std::size_t components = 0;
    std::size_t largest_component_size = 0;
    /// Path metrics cover only the largest component.
    bool disconnected = false;
    std::size_t triangles = 0;
    double density = 0.0;
};

inline MetricsReport basic_metrics(const Graph& g) {
    require_undirected(g, "basic_metrics");
    const std::size_t n = g.node_count();
    if (n < 1) throw std::invalid_argument("basic_metrics needs at least one node");
    MetricsReport r;

    std::size_t max_deg = 0;
    for (Node v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    r.degree_histogram.assign(max_deg + 1, 0);
    double triples = 0.0;
    for (Node v = 0; v < n; ++v) {
        const auto d = g.degree(v);
        ++r.degree_histogram[d];
        triples += static_cast<double>(d) * (d - 1) / 2.0;
    }
    const double m = static_cast<double>(g.edge_count());
    r.mean_degree = 2.0 * m / static_cast<double>(n);
    r.density = n > 1 ? 2.0 * m / (static_cast<double>(n) * (n - 1)) : 0.0;
    r.triangles = triangle_count(g);
    r.global_clustering = triples > 0 ? 3.0 * static_cast<double>(r.triangles) / triples : 0.0;

    auto comp = connected_components(g, &r.components);
    std::vector<std::size_t> sizes(r.components, 0);
    for (auto c : comp) ++sizes[c];
    // Ties go to the component holding the smallest node (lowest id).
    const std::size_t largest =
        static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    r.largest_component_size = sizes[largest];
    r.disconnected = r.components > 1;

    double total = 0.0;
    std::size_t pairs = 0;
    for (Node s = 0; s < n; ++s) {
        if (comp[s] != largest) continue;
        auto dist = bfs_distances(g, s);
        for (Node t = s + 1; t < n; ++t) {
            if (comp[t] != largest) continue;
            total += static_cast<double>(dist[t]);
            r.diameter = std::max(r.diameter, dist[t]);
            ++pairs;
        }
    }
    r.average_path_length = pairs ? total / static_cast<double>(pairs) : 0.0;
    return r;
}

/// Core number per node by repeated removal of minimum-degree nodes.
inline std::vector<std::size_t> k_core(const Graph& g) {
    require_undirected(g, "k_core");
    const std::size_t n = g.node_count();
    std::vector<std::size_t> deg(n), core(n, 0);
    std::size_t max_deg = 0;
    for (Node v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    // Bucket queue keyed by current degree.
    std::vector<std::vector<Node>> buckets(max_deg + 1);
    for (Node v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<bool> removed(n, false);
    std::size_t k = 0;
    for (std::size_t processed = 0; processed < n;) {
        std::size_t d = 0;
        while (d <= max_deg && buckets[d].empty()) ++d;
        const Node v = buckets[d].back();
        buckets[d].pop_back();
        if (removed[v] || deg[v] != d) continue; // stale entry
        k = std::max(k, d);
        core[v] = k;
        removed[v] = true;
        ++processed;
        for (Node w : g.neighbors(v)) {
            if (removed[w]) continue;
            --deg[w];
            buckets[deg[w]].push_back(w);
        }
    }
    return core;
}

struct QuasiCliqueDensity {
    double density = 0.0;
    std::size_t internal_edges = 0;

    /// At least gamma, up to floating-point slack.
    bool gamma_dense(double gamma) const { return density + 1e-12 >= gamma; }
};

/// Internal edge density of a node subset.
inline QuasiCliqueDensity quasi_clique_density(const Graph& g, const std::vector<Node>& subset) {
    require_undirected(g, "quasi_clique_density");
    std::set<Node> s(subset.begin(), subset.end());
    if (s.size() < 2) throw std::invalid_argument("quasi-clique density needs at least 2 nodes");
    for (Node v : s) require_node(g, v);
    std::size_t inside = 0;
    for (Node v : s)
        for (Node w : g.neighbors(v))
            if (w > v && s.count(w)) ++inside;
    const double k = static_cast<double>(s.size());
    return {static_cast<double>(inside) / (k * (k - 1) / 2.0), inside};
}

/// Greedy gamma-dense growth from the highest-degree node (lowest id on
/// ties): repeatedly add the neighbouring node giving the densest result
/// while the density stays at least gamma.
inline std::vector<Node> greedy_quasi_clique(const Graph& g, double gamma) {
    require_undirected(g, "greedy_quasi_clique");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must be in (0, 1]");
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("greedy_quasi_clique on an empty graph");

    Node seed = 0;
    for (Node v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(seed)) seed = v;

    std::vector<bool> in(n, false);
    std::vector<std::size_t> links(n, 0); // edges from each node into the set
    std::vector<Node> members{seed};
    in[seed] = true;
    for (Node w : g.neighbors(seed)) ++links[w];
    std::size_t internal = 0;

    while (true) {
        const double k = static_cast<double>(members.size());
        const double pairs_after = (k + 1) * k / 2.0;
        std::optional<Node> best;
        for (Node c = 0; c < n; ++c) {
            if (in[c] || links[c] == 0) continue;
            if (!best || links[c] > links[*best]) best = c;
        }
        if (!best) break;
        const double density = static_cast<double>(internal + links[*best]) / pairs_after;
        if (density + 1e-12 < gamma) break;
        in[*best] = true;
        internal += links[*best];
        members.push_back(*best);
        for (Node w : g.neighbors(*best)) ++links[w];
    }
    std::sort(members.begin(), members.end());
    return members;
}

struct TriadBalance {
    std::size_t balanced_triangles = 0;
    std::size_t unbalanced_triangles = 0;
    bool is_balanced = true;
};

/// A triangle is balanced when it has an even number of negative edges.
inline TriadBalance triad_balance(const Graph& g) {
    require_undirected(g, "triad_balance");
    for (const auto& e : g.edges())
        if (!e.sign)
            throw std::invalid_argument("triad_balance: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") has no sign");
    TriadBalance r;
    for (const auto& e : g.edges()) {
        for (Node w : g.neighbors(e.u)) {
            if (w <= e.v || !g.has_edge(e.v, w)) continue;
            int negatives = (*e.sign < 0) + (*g.find_edge(e.u, w)->sign < 0) +
                            (*g.find_edge(e.v, w)->sign < 0);
            if (negatives % 2 == 0)
                ++r.balanced_triangles;
            else
                ++r.unbalanced_triangles;
        }
    }
    r.is_balanced = r.unbalanced_triangles == 0;
    return r;
}

} // namespace snacap::net

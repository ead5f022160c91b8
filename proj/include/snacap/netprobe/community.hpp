#pragma once

// Community structure: modularity, agglomerative greedy merging and
// divisive edge-betweenness removal. Edge weights are ignored.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "centrality.hpp"
#include "graph.hpp"
#include "metrics.hpp"

namespace snacap::net {

/// community[v] is the community id of node v.
using Partition = std::vector<std::size_t>;

/// Relabels ids in order of first appearance so equal groupings compare equal.
inline Partition canonical_partition(const Partition& p) {
    std::map<std::size_t, std::size_t> relabel;
    Partition out(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) {
        auto [it, _] = relabel.try_emplace(p[v], relabel.size());
        out[v] = it->second;
    }
    return out;
}

inline double modularity(const Graph& g, const Partition& p) {
    require_undirected(g, "modularity");
    if (g.edge_count() == 0) throw std::invalid_argument("modularity needs at least one edge");
    if (p.size() != g.node_count())
        throw std::invalid_argument("partition must assign every node exactly once");
    std::map<std::size_t, double> internal, degree_sum;
    for (const auto& e : g.edges())
        if (p[e.u] == p[e.v]) internal[p[e.u]] += 1.0;
    for (Node v = 0; v < g.node_count(); ++v) degree_sum[p[v]] += static_cast<double>(g.degree(v));
    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (const auto& [c, d] : degree_sum) {
        auto it = internal.find(c);
        const double l = it == internal.end() ? 0.0 : it->second;
        q += l / m - (d / (2.0 * m)) * (d / (2.0 * m));
    }
    return q;
}

/// Starts from singletons and merges the adjacent pair with the largest
/// positive modularity gain until none remains. Gains are compared in exact
/// integer form; ties go to the smallest (i, j) community-id pair.
inline Partition greedy_modularity(const Graph& g) {
    require_undirected(g, "greedy_modularity");
    if (g.edge_count() == 0) throw std::invalid_argument("greedy_modularity needs at least one edge");
    const std::size_t n = g.node_count();
    const auto two_m = static_cast<std::int64_t>(2 * g.edge_count());

    // links[{i, j}] (i < j): edges between communities i and j.
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> links;
    for (const auto& e : g.edges()) ++links[{e.u, e.v}];
    std::vector<std::int64_t> deg(n);
    for (Node v = 0; v < n; ++v) deg[v] = static_cast<std::int64_t>(g.degree(v));
    Partition owner(n);
    for (Node v = 0; v < n; ++v) owner[v] = v;

    while (true) {
        // Gain of merging i and j, scaled by 2m^2: 2m * L_ij - D_i * D_j.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        std::int64_t best_gain = 0;
        for (const auto& [key, l] : links) {
            const std::int64_t gain = two_m * l - deg[key.first] * deg[key.second];
            if (gain > best_gain) {
                best_gain = gain;
                best = key;
            }
        }
        if (!best) break;
        const auto [keep, gone] = *best;
        deg[keep] += deg[gone];
        deg[gone] = 0;
        for (auto& o : owner)
            if (o == gone) o = keep;
        std::map<std::pair<std::size_t, std::size_t>, std::int64_t> merged;
        for (const auto& [key, l] : links) {
            std::size_t a = key.first == gone ? keep : key.first;
            std::size_t b = key.second == gone ? keep : key.second;
            if (a == b) continue;
            merged[{std::min(a, b), std::max(a, b)}] += l;
        }
        links.swap(merged);
    }
    return canonical_partition(owner);
}

inline Partition components_partition(const Graph& g) {
    return canonical_partition(connected_components(g));
}

struct GirvanNewmanResult {
    Partition partition;
    std::vector<std::pair<Node, Node>> removed;
    /// Modularity of the partition on the input graph; absent without edges.
    std::optional<double> modularity;
};

namespace detail {

/// Edge with the highest betweenness; lexicographically smallest on ties.
inline std::pair<Node, Node> most_between_edge(const Graph& g) {
    const auto eb = edge_betweenness(g);
    double top = 0.0;
    for (const auto& [_, b] : eb) top = std::max(top, b);
    const double cutoff = top - 1e-9 * std::max(1.0, top);
    for (const auto& [e, b] : eb)
        if (b >= cutoff) return e;
    return eb.begin()->first;
}

} // namespace detail

/// Removes the highest-betweenness edge (recomputed after every removal)
/// until the graph splits into `target_components` components.
inline GirvanNewmanResult girvan_newman(const Graph& g, std::size_t target_components) {
    require_undirected(g, "girvan_newman");
    const std::size_t start = component_count(g);
    if (target_components < 1 || target_components > g.node_count() || target_components < start)
        throw std::invalid_argument("girvan_newman: target of " + std::to_string(target_components) +
                                    " components is unreachable (graph has " + std::to_string(start) +
                                    " components and " + std::to_string(g.node_count()) + " nodes)");
    GirvanNewmanResult r;
    Graph cur = g;
    while (component_count(cur) < target_components) {
        const auto e = detail::most_between_edge(cur);
        r.removed.push_back(e);
        cur = cur.without_edge(e.first, e.second);
    }
    r.partition = components_partition(cur);
    if (g.edge_count() > 0) r.modularity = modularity(g, r.partition);
    return r;
}

/// Removes edges until none remain and keeps the component split with the
/// highest modularity on the input graph (earliest split on ties).
inline GirvanNewmanResult girvan_newman_best(const Graph& g) {
    require_undirected(g, "girvan_newman");
    if (g.edge_count() == 0) throw std::invalid_argument("girvan_newman_best needs at least one edge");
    GirvanNewmanResult best;
    best.partition = components_partition(g);
    best.modularity = modularity(g, best.partition);
    std::vector<std::pair<Node, Node>> removed;
    Graph cur = g;
    std::size_t comps = component_count(cur);
    while (cur.edge_count() > 0) {
        const auto e = detail::most_between_edge(cur);
        removed.push_back(e);
        cur = cur.without_edge(e.first, e.second);
        const std::size_t now = component_count(cur);
        if (now == comps) continue;
        comps = now;
        auto p = components_partition(cur);
        const double q = modularity(g, p);
        if (q > *best.modularity + 1e-12) {
            best.partition = std::move(p);
            best.modularity = q;
            best.removed = removed;
        }
    }
    return best;
}

} // namespace snacap::net

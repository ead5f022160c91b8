#pragma once

// Node centralities. Betweenness counts unordered pairs, excludes endpoints,
// splits credit across equal-length shortest paths and is not normalized.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "metrics.hpp"

namespace snacap::net {

enum class CentralityMeasure { degree, closeness, betweenness, eigenvector, pagerank };

inline std::optional<CentralityMeasure> parse_centrality_measure(std::string_view s) {
    if (s == "degree") return CentralityMeasure::degree;
    if (s == "closeness") return CentralityMeasure::closeness;
    if (s == "betweenness") return CentralityMeasure::betweenness;
    if (s == "eigenvector") return CentralityMeasure::eigenvector;
    if (s == "pagerank") return CentralityMeasure::pagerank;
    return std::nullopt;
}

struct CentralityParams {
    double damping = 0.85;
    double tolerance = 1e-9;
    std::size_t max_iterations = 200;
};

struct CentralityResult {
    std::vector<double> scores;
    /// Closeness and eigenvector were computed separately per component.
    bool per_component = false;
    /// Iterations used by pagerank or eigenvector.
    std::size_t iterations = 0;
};

/// Degree (in + out for directed graphs).
inline std::vector<double> degree_centrality(const Graph& g) {
    std::vector<double> out(g.node_count());
    for (Node v = 0; v < g.node_count(); ++v) {
        std::size_t d = g.degree(v);
        if (g.directed()) d += g.in_neighbors(v).size();
        out[v] = static_cast<double>(d);
    }
    return out;
}

/// (n_c - 1) / sum of distances, where n_c counts the nodes reachable from v.
/// Isolated nodes score 0.
inline CentralityResult closeness_centrality(const Graph& g) {
    require_undirected(g, "closeness");
    CentralityResult r;
    r.scores.assign(g.node_count(), 0.0);
    r.per_component = component_count(g) > 1;
    for (Node v = 0; v < g.node_count(); ++v) {
        auto dist = bfs_distances(g, v);
        double sum = 0.0;
        std::size_t reached = 0;
        for (auto d : dist) {
            if (d == kUnreachable || d == 0) continue;
            sum += static_cast<double>(d);
            ++reached;
        }
        r.scores[v] = sum > 0 ? static_cast<double>(reached) / sum : 0.0;
    }
    return r;
}

namespace detail {

/// Single-source shortest-path DAG used by Brandes' accumulation.
struct PathDag {
    std::vector<Node> order; // nodes in non-decreasing distance
    std::vector<std::vector<Node>> preds;
    std::vector<double> sigma;
};

inline PathDag shortest_path_dag(const Graph& g, Node s) {
    const std::size_t n = g.node_count();
    PathDag dag;
    dag.preds.assign(n, {});
    dag.sigma.assign(n, 0.0);
    std::vector<std::size_t> dist(n, kUnreachable);
    std::queue<Node> q;
    dist[s] = 0;
    dag.sigma[s] = 1.0;
    q.push(s);
    while (!q.empty()) {
        const Node v = q.front();
        q.pop();
        dag.order.push_back(v);
        for (Node w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
            if (dist[w] == dist[v] + 1) {
                dag.sigma[w] += dag.sigma[v];
                dag.preds[w].push_back(v);
            }
        }
    }
    return dag;
}

} // namespace detail

inline std::vector<double> betweenness_centrality(const Graph& g) {
    require_undirected(g, "betweenness");
    const std::size_t n = g.node_count();
    std::vector<double> cb(n, 0.0);
    std::vector<double> delta(n);
    for (Node s = 0; s < n; ++s) {
        auto dag = detail::shortest_path_dag(g, s);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
            const Node w = *it;
            for (Node v : dag.preds[w]) delta[v] += dag.sigma[v] / dag.sigma[w] * (1.0 + delta[w]);
            if (w != s) cb[w] += delta[w];
        }
    }
    // Every unordered pair was visited from both ends.
    for (auto& x : cb) x /= 2.0;
    return cb;
}

/// Edge betweenness over unordered pairs, keyed by (u, v) with u < v.
inline std::map<std::pair<Node, Node>, double> edge_betweenness(const Graph& g) {
    require_undirected(g, "edge_betweenness");
    const std::size_t n = g.node_count();
    std::map<std::pair<Node, Node>, double> eb;
    for (const auto& e : g.edges()) eb[{e.u, e.v}] = 0.0;
    std::vector<double> delta(n);
    for (Node s = 0; s < n; ++s) {
        auto dag = detail::shortest_path_dag(g, s);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
            const Node w = *it;
            for (Node v : dag.preds[w]) {
                const double c = dag.sigma[v] / dag.sigma[w] * (1.0 + delta[w]);
                eb[{std::min(v, w), std::max(v, w)}] += c;
                delta[v] += c;
            }
        }
    }
    for (auto& [_, x] : eb) x /= 2.0;
    return eb;
}

/// Power iteration on A + I (the shift keeps bipartite graphs from
/// oscillating and leaves the dominant eigenvector unchanged). Each
/// component is normalized to unit 2-norm on its own.
inline CentralityResult eigenvector_centrality(const Graph& g, const CentralityParams& prm = {}) {
    require_undirected(g, "eigenvector");
    const std::size_t n = g.node_count();
    std::size_t ncomp = 0;
    auto comp = connected_components(g, &ncomp);
    CentralityResult r;
    r.per_component = ncomp > 1;
    r.scores.assign(n, 0.0);
    std::vector<double> next(n);
    for (std::size_t c = 0; c < ncomp; ++c) {
        std::vector<Node> nodes;
        for (Node v = 0; v < n; ++v)
            if (comp[v] == c) nodes.push_back(v);
        const double init = 1.0 / std::sqrt(static_cast<double>(nodes.size()));
        for (Node v : nodes) r.scores[v] = init;
        for (std::size_t it = 0; it < prm.max_iterations; ++it) {
            double norm = 0.0;
            for (Node v : nodes) {
                double s = r.scores[v];
                for (Node w : g.neighbors(v)) s += r.scores[w];
                next[v] = s;
                norm += s * s;
            }
            norm = std::sqrt(norm);
            double change = 0.0;
            for (Node v : nodes) {
                next[v] /= norm;
                change = std::max(change, std::abs(next[v] - r.scores[v]));
                r.scores[v] = next[v];
            }
            r.iterations = std::max(r.iterations, it + 1);
            if (change < prm.tolerance) break;
        }
    }
    return r;
}

/// PageRank with uniform teleport; mass at dangling nodes is spread
/// uniformly. Accepts directed graphs.
inline CentralityResult pagerank(const Graph& g, const CentralityParams& prm = {}) {
    if (!(prm.damping > 0.0 && prm.damping <= 1.0))
        throw std::invalid_argument("pagerank damping must be in (0, 1]");
    const std::size_t n = g.node_count();
    CentralityResult r;
    if (n == 0) return r;
    const double nd = static_cast<double>(n);
    r.scores.assign(n, 1.0 / nd);
    std::vector<double> next(n);
    for (std::size_t it = 0; it < prm.max_iterations; ++it) {
        double dangling = 0.0;
        for (Node v = 0; v < n; ++v)
            if (g.degree(v) == 0) dangling += r.scores[v];
        const double base = (1.0 - prm.damping) / nd + prm.damping * dangling / nd;
        std::fill(next.begin(), next.end(), base);
        for (Node v = 0; v < n; ++v) {
            const auto out = g.neighbors(v);
            if (out.empty()) continue;
            const double share = prm.damping * r.scores[v] / static_cast<double>(out.size());
            for (Node w : out) next[w] += share;
        }
        double change = 0.0;
        for (Node v = 0; v < n; ++v) change = std::max(change, std::abs(next[v] - r.scores[v]));
        r.scores.swap(next);
        r.iterations = it + 1;
        if (change < prm.tolerance) break;
    }
    return r;
}

inline CentralityResult centrality(const Graph& g, CentralityMeasure m, const CentralityParams& prm = {}) {
    switch (m) {
    case CentralityMeasure::degree: return {degree_centrality(g), false, 0};
    case CentralityMeasure::closeness: return closeness_centrality(g);
    case CentralityMeasure::betweenness: return {betweenness_centrality(g), false, 0};
    case CentralityMeasure::eigenvector: return eigenvector_centrality(g, prm);
    case CentralityMeasure::pagerank: return pagerank(g, prm);
    }
    throw std::invalid_argument("unknown centrality measure");
}

} // namespace snacap::net

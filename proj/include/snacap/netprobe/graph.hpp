#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snacap::net {

using Node = std::size_t;

struct Edge {
    Node u = 0;
    Node v = 0;
    double weight = 1.0;
    /// +1 or -1 for signed graphs.
    std::optional<int> sign{};

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple graph (no self-loops, no parallel edges), immutable once built.
/// Undirected edges are stored once with u < v.
class Graph {
  public:
    Graph() = default;

    Graph(std::size_t n, std::vector<Edge> edges, bool directed = false)
        : n_(n), directed_(directed), edges_(std::move(edges)), out_(n), in_(directed ? n : 0) {
        for (auto& e : edges_) {
            if (e.u >= n || e.v >= n)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") references a node >= " +
                                            std::to_string(n));
            if (e.u == e.v)
                throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
            if (e.sign && *e.sign != 1 && *e.sign != -1)
                throw std::invalid_argument("edge sign must be +1 or -1");
            if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
                throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                                            std::to_string(edges_[i].v) + ")");
        }
        for (const auto& e : edges_) {
            out_[e.u].push_back(e.v);
            if (directed_)
                in_[e.v].push_back(e.u);
            else
                out_[e.v].push_back(e.u);
        }
        for (auto& a : out_) std::sort(a.begin(), a.end());
        for (auto& a : in_) std::sort(a.begin(), a.end());
    }

    /// Builds an undirected graph from plain node pairs.
    static Graph from_pairs(std::size_t n, const std::vector<std::pair<Node, Node>>& pairs) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [u, v] : pairs) edges.push_back({u, v, 1.0, std::nullopt});
        return Graph(n, std::move(edges));
    }

    std::size_t node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Out-neighbours (all neighbours when undirected), ascending.
    std::span<const Node> neighbors(Node v) const { return out_.at(v); }
    std::span<const Node> in_neighbors(Node v) const {
        return directed_ ? std::span<const Node>(in_.at(v)) : neighbors(v);
    }
    std::size_t degree(Node v) const { return out_.at(v).size(); }

    bool has_edge(Node u, Node v) const {
        if (u >= n_ || v >= n_) return false;
        const auto& a = out_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const Edge* find_edge(Node u, Node v) const {
        if (!directed_ && u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                                   [](const Edge& e, const std::pair<Node, Node>& k) {
                                       return std::pair(e.u, e.v) < k;
                                   });
        if (it != edges_.end() && it->u == u && it->v == v) return &*it;
        return nullptr;
    }

    /// Copy without the listed edges.
    Graph without_edge(Node u, Node v) const {
        if (!directed_ && u > v) std::swap(u, v);
        std::vector<Edge> kept;
        kept.reserve(edges_.size());
        for (const auto& e : edges_)
            if (!(e.u == u && e.v == v)) kept.push_back(e);
        return Graph(n_, std::move(kept), directed_);
    }

  private:
    std::size_t n_ = 0;
    bool directed_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<Node>> out_;
    std::vector<std::vector<Node>> in_;
};

inline void require_undirected(const Graph& g, const char* op) {
    if (g.directed()) throw std::invalid_argument(std::string(op) + " requires an undirected graph");
}

inline void require_node(const Graph& g, Node v) {
    if (v >= g.node_count())
        throw std::invalid_argument("node " + std::to_string(v) + " out of range");
}

} // namespace snacap::net

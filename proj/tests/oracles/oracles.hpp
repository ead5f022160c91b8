#pragma once

// Slow, direct reference computations used to check the library. Each one
// follows the textbook definition without sharing code with include/.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

inline std::vector<std::vector<int>> adjacency(std::size_t n, const Pairs& edges) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
    return a;
}

/// Random simple undirected graph, each pair present with probability p.
inline Pairs random_pairs(std::size_t n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Pairs out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (u(rng) < p) out.emplace_back(i, j);
    return out;
}

/// Q = 1/(2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j) over all ordered pairs.
inline double modularity(std::size_t n, const Pairs& edges, const std::vector<std::size_t>& comm) {
    const auto a = adjacency(n, edges);
    std::vector<double> k(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k[i] += a[i][j];
    const double two_m = 2.0 * static_cast<double>(edges.size());
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (comm[i] == comm[j]) q += a[i][j] - k[i] * k[j] / two_m;
    return q / two_m;
}

/// Best modularity over every set partition (restricted growth strings).
inline std::pair<double, std::vector<std::size_t>> best_partition(std::size_t n, const Pairs& edges) {
    std::vector<std::size_t> rgs(n, 0), best;
    double best_q = -std::numeric_limits<double>::infinity();
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            const double q = modularity(n, edges, rgs);
            if (q > best_q + 1e-12) {
                best_q = q;
                best = rgs;
            }
            return;
        }
        for (std::size_t c = 0; c <= used; ++c) {
            rgs[i] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    rgs[0] = 0;
    rec(1, 1);
    return {best_q, best};
}

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// Floyd-Warshall hop distances.
inline std::vector<std::vector<int>> distances(std::size_t n, const Pairs& edges) {
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

/// Betweenness by listing every shortest path of every unordered pair.
inline std::vector<double> betweenness(std::size_t n, const Pairs& edges) {
    const auto a = adjacency(n, edges);
    const auto d = distances(n, edges);
    std::vector<double> out(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            if (d[s][t] >= kInf) continue;
            std::vector<std::vector<std::size_t>> paths;
            std::vector<std::size_t> cur{s};
            std::function<void(std::size_t)> walk = [&](std::size_t u) {
                if (u == t) {
                    paths.push_back(cur);
                    return;
                }
                for (std::size_t w = 0; w < n; ++w) {
                    if (!a[u][w] || d[s][w] != d[s][u] + 1 || d[w][t] != d[u][t] - 1) continue;
                    cur.push_back(w);
                    walk(w);
                    cur.pop_back();
                }
            };
            walk(s);
            std::vector<double> through(n, 0.0);
            for (const auto& p : paths)
                for (std::size_t i = 1; i + 1 < p.size(); ++i) through[p[i]] += 1.0;
            for (std::size_t v = 0; v < n; ++v) out[v] += through[v] / static_cast<double>(paths.size());
        }
    }
    return out;
}

/// (reachable - 1) / sum of distances to reachable nodes; 0 when isolated.
inline std::vector<double> closeness(std::size_t n, const Pairs& edges) {
    const auto d = distances(n, edges);
    std::vector<double> out(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        double sum = 0.0;
        std::size_t reach = 0;
        for (std::size_t w = 0; w < n; ++w) {
            if (w == v || d[v][w] >= kInf) continue;
            sum += d[v][w];
            ++reach;
        }
        out[v] = reach ? static_cast<double>(reach) / sum : 0.0;
    }
    return out;
}

struct Pt {
    std::string name;
    double x = 0.0;
    double y = 0.0;
};

/// Names of the points no other point dominates, sorted.
inline std::vector<std::string> pareto_names(const std::vector<Pt>& pts) {
    std::vector<std::string> out;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts)
            if (q.x >= p.x && q.y >= p.y && (q.x > p.x || q.y > p.y)) dominated = true;
        if (!dominated) out.push_back(p.name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Polygon area from the `points` attribute of the element with the given
/// class in an SVG document.
inline double svg_polygon_area(const std::string& svg, const std::string& cls) {
    const auto at = svg.find("class=\"" + cls + "\" points=\"");
    if (at == std::string::npos) return -1.0;
    const auto start = svg.find("points=\"", at) + 8;
    const auto stop = svg.find('"', start);
    std::vector<std::pair<double, double>> v;
    std::string body = svg.substr(start, stop - start);
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t sp = body.find(' ', pos);
        if (sp == std::string::npos) sp = body.size();
        const std::string tok = body.substr(pos, sp - pos);
        const auto comma = tok.find(',');
        v.emplace_back(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
        pos = sp + 1;
    }
    double twice = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        twice += p.first * q.second - q.first * p.second;
    }
    return std::abs(twice) / 2.0;
}

} // namespace oracle

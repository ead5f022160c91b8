#include <gtest/gtest.h>

#include <snacap/netprobe/generators.hpp>
#include <snacap/netprobe/metrics.hpp>

#include <random>

#include "oracles/oracles.hpp"

using namespace snacap::net;

namespace {

Graph complete(std::size_t n) { return gilbert_gnp(n, 1.0, 0); }

Graph path(std::size_t n) {
    std::vector<std::pair<Node, Node>> e;
    for (Node v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_pairs(n, e);
}

Graph two_triangles() { return Graph::from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

Graph star(std::size_t leaves) {
    std::vector<std::pair<Node, Node>> e;
    for (Node v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_pairs(leaves + 1, e);
}

} // namespace

TEST(BasicMetrics, Triangle) {
    const auto m = basic_metrics(complete(3));
    EXPECT_DOUBLE_EQ(m.global_clustering, 1.0);
    EXPECT_EQ(m.diameter, 1u);
    EXPECT_EQ(m.components, 1u);
    EXPECT_EQ(m.triangles, 1u);
    EXPECT_DOUBLE_EQ(m.density, 1.0);
    EXPECT_FALSE(m.disconnected);
}

TEST(BasicMetrics, PathOnThree) {
    const auto m = basic_metrics(path(3));
    EXPECT_DOUBLE_EQ(m.global_clustering, 0.0);
    EXPECT_EQ(m.diameter, 2u);
    EXPECT_DOUBLE_EQ(m.average_path_length, 4.0 / 3.0);
    EXPECT_EQ(m.degree_histogram, (std::vector<std::size_t>{0, 2, 1}));
    EXPECT_DOUBLE_EQ(m.mean_degree, 4.0 / 3.0);
}

TEST(BasicMetrics, TwoDisjointTriangles) {
    const auto m = basic_metrics(two_triangles());
    EXPECT_EQ(m.components, 2u);
    EXPECT_EQ(m.diameter, 1u);
    EXPECT_TRUE(m.disconnected);
    EXPECT_EQ(m.largest_component_size, 3u);
    EXPECT_EQ(m.triangles, 2u);
}

TEST(BasicMetrics, SingleNode) {
    const auto m = basic_metrics(Graph(1, {}));
    EXPECT_EQ(m.components, 1u);
    EXPECT_EQ(m.diameter, 0u);
    EXPECT_EQ(m.average_path_length, 0.0);
    EXPECT_THROW(basic_metrics(Graph(0, {})), std::invalid_argument);
}

TEST(BasicMetrics, PathLengthMatchesFloydOracle) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 8 + t % 10;
        const auto pairs = oracle::random_pairs(n, 0.35, rng);
        const auto g = Graph::from_pairs(n, pairs);
        const auto m = basic_metrics(g);
        const auto d = oracle::distances(n, pairs);
        if (m.disconnected) continue;
        double sum = 0.0;
        int diam = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                sum += d[i][j];
                diam = std::max(diam, d[i][j]);
            }
        EXPECT_NEAR(m.average_path_length, sum / (n * (n - 1) / 2.0), 1e-12);
        EXPECT_EQ(m.diameter, static_cast<std::size_t>(diam));
    }
}

TEST(Triangles, MatchBruteForce) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 12;
        const auto pairs = oracle::random_pairs(n, 0.4, rng);
        const auto a = oracle::adjacency(n, pairs);
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) count += a[i][j] && a[j][k] && a[i][k];
        EXPECT_EQ(triangle_count(Graph::from_pairs(n, pairs)), count);
    }
}

TEST(LocalClustering, Examples) {
    EXPECT_DOUBLE_EQ(local_clustering(complete(3), 1), 1.0);
    EXPECT_DOUBLE_EQ(local_clustering(star(4), 0), 0.0);
    EXPECT_DOUBLE_EQ(local_clustering(star(4), 2), 0.0);
    const auto k4_minus = Graph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    EXPECT_DOUBLE_EQ(local_clustering(k4_minus, 0), 2.0 / 3.0);
    EXPECT_THROW(local_clustering(complete(3), 3), std::invalid_argument);
}

TEST(KCore, Examples) {
    EXPECT_EQ(k_core(complete(3)), (std::vector<std::size_t>{2, 2, 2}));
    EXPECT_EQ(k_core(star(4)), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
    const auto k4_pendant = Graph::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    EXPECT_EQ(k_core(k4_pendant), (std::vector<std::size_t>{3, 3, 3, 3, 1}));
    EXPECT_EQ(k_core(Graph(2, {})), (std::vector<std::size_t>{0, 0}));
}

TEST(KCore, CoreMembersHaveEnoughInternalNeighbours) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const auto pairs = oracle::random_pairs(25, 0.2, rng);
        const auto g = Graph::from_pairs(25, pairs);
        const auto core = k_core(g);
        for (Node v = 0; v < 25; ++v) {
            std::size_t inside = 0;
            for (Node w : g.neighbors(v)) inside += core[w] >= core[v];
            EXPECT_GE(inside, core[v]);
        }
    }
}

TEST(QuasiClique, Density) {
    EXPECT_DOUBLE_EQ(quasi_clique_density(complete(4), {0, 1, 2, 3}).density, 1.0);
    EXPECT_TRUE(quasi_clique_density(complete(4), {0, 1, 2, 3}).gamma_dense(1.0));
    EXPECT_DOUBLE_EQ(quasi_clique_density(path(3), {0, 1, 2}).density, 2.0 / 3.0);
    EXPECT_FALSE(quasi_clique_density(path(3), {0, 1, 2}).gamma_dense(0.7));
    EXPECT_DOUBLE_EQ(quasi_clique_density(Graph(2, {}), {0, 1}).density, 0.0);
    EXPECT_THROW(quasi_clique_density(path(3), {1}), std::invalid_argument);
}

TEST(QuasiClique, GreedyExamples) {
    const auto k4_iso = Graph::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(greedy_quasi_clique(k4_iso, 1.0), (std::vector<Node>{0, 1, 2, 3}));
    EXPECT_EQ(greedy_quasi_clique(Graph(1, {}), 1.0), (std::vector<Node>{0}));
    const auto bridged = Graph::from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    EXPECT_EQ(greedy_quasi_clique(bridged, 1.0), (std::vector<Node>{0, 1, 2}));
    EXPECT_THROW(greedy_quasi_clique(bridged, 0.0), std::invalid_argument);
    EXPECT_THROW(greedy_quasi_clique(Graph(0, {}), 0.5), std::invalid_argument);
}

TEST(QuasiClique, GreedyResultIsGammaDense) {
    std::mt19937_64 rng(2);
    for (double gamma : {0.5, 0.7, 0.9}) {
        for (int t = 0; t < 10; ++t) {
            const auto g = Graph::from_pairs(20, oracle::random_pairs(20, 0.3, rng));
            const auto s = greedy_quasi_clique(g, gamma);
            if (s.size() >= 2) {
                EXPECT_TRUE(quasi_clique_density(g, s).gamma_dense(gamma));
            }
        }
    }
}

TEST(TriadBalance, Examples) {
    auto k3 = [](int a, int b, int c) { return Graph(3, {{0, 1, 1.0, a}, {1, 2, 1.0, b}, {0, 2, 1.0, c}}); };
    EXPECT_TRUE(triad_balance(k3(1, 1, 1)).is_balanced);
    const auto one = triad_balance(k3(1, -1, 1));
    EXPECT_FALSE(one.is_balanced);
    EXPECT_EQ(one.unbalanced_triangles, 1u);
    EXPECT_TRUE(triad_balance(k3(-1, -1, 1)).is_balanced);
    EXPECT_FALSE(triad_balance(k3(-1, -1, -1)).is_balanced);
    EXPECT_THROW(triad_balance(Graph::from_pairs(3, {{0, 1}})), std::invalid_argument);
}

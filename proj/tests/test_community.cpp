#include <gtest/gtest.h>

#include <snacap/netprobe/community.hpp>

#include <random>

#include "oracles/oracles.hpp"

using namespace snacap::net;

namespace {

const oracle::Pairs kTwoTriangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};

oracle::Pairs two_k4_bridge() {
    oracle::Pairs e;
    for (std::size_t base : {0u, 4u})
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) e.emplace_back(base + i, base + j);
    e.emplace_back(3, 4);
    return e;
}

} // namespace

TEST(Modularity, SingleCommunityIsZero) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto pairs = oracle::random_pairs(15, 0.3, rng);
        if (pairs.empty()) continue;
        EXPECT_NEAR(modularity(Graph::from_pairs(15, pairs), Partition(15, 0)), 0.0, 1e-15);
    }
}

TEST(Modularity, TwoTriangles) {
    const auto g = Graph::from_pairs(6, kTwoTriangles);
    EXPECT_DOUBLE_EQ(modularity(g, {0, 0, 0, 1, 1, 1}), 0.5);
    const Partition crossing{0, 0, 1, 1, 0, 1};
    const double q = modularity(g, crossing);
    EXPECT_LT(q, 0.0);
    EXPECT_NEAR(q, oracle::modularity(6, kTwoTriangles, crossing), 1e-15);
}

TEST(Modularity, Errors) {
    EXPECT_THROW(modularity(Graph(3, {}), {0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(modularity(Graph::from_pairs(3, {{0, 1}}), {0, 0}), std::invalid_argument);
}

TEST(Modularity, MatchesDirectDoubleSum) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> comms(1, 6);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 5 + t % 30;
        const auto pairs = oracle::random_pairs(n, 0.2, rng);
        if (pairs.empty()) continue;
        const std::size_t k = comms(rng);
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        Partition p(n);
        for (auto& c : p) c = pick(rng);
        EXPECT_NEAR(modularity(Graph::from_pairs(n, pairs), p), oracle::modularity(n, pairs, p), 1e-12);
    }
}

TEST(GreedyModularity, Examples) {
    EXPECT_EQ(greedy_modularity(Graph::from_pairs(8, two_k4_bridge())),
              (Partition{0, 0, 0, 0, 1, 1, 1, 1}));
    EXPECT_EQ(greedy_modularity(Graph::from_pairs(2, {{0, 1}})), (Partition{0, 0}));
    const auto g = Graph::from_pairs(6, kTwoTriangles);
    const auto p = greedy_modularity(g);
    EXPECT_EQ(p, (Partition{0, 0, 0, 1, 1, 1}));
    EXPECT_DOUBLE_EQ(modularity(g, p), 0.5);
    EXPECT_THROW(greedy_modularity(Graph(3, {})), std::invalid_argument);
}

TEST(GreedyModularity, TwoK4AgreesWithExhaustiveSearch) {
    const auto e = two_k4_bridge();
    const auto [best_q, best] = oracle::best_partition(8, e);
    const auto g = Graph::from_pairs(8, e);
    const auto p = greedy_modularity(g);
    EXPECT_EQ(p, canonical_partition(best));
    EXPECT_NEAR(modularity(g, p), best_q, 1e-12);
}

TEST(GreedyModularity, NeverBelowSingletonsOnRandomGraphs) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 15; ++t) {
        const auto pairs = oracle::random_pairs(30, 0.15, rng);
        if (pairs.empty()) continue;
        const auto g = Graph::from_pairs(30, pairs);
        Partition singletons(30);
        for (std::size_t v = 0; v < 30; ++v) singletons[v] = v;
        const auto p = greedy_modularity(g);
        EXPECT_GE(modularity(g, p), modularity(g, singletons));
        // Every community is internally connected by construction.
        EXPECT_EQ(p.size(), 30u);
    }
}

TEST(GirvanNewman, TwoK4BridgeRemovedFirst) {
    const auto r = girvan_newman(Graph::from_pairs(8, two_k4_bridge()), 2);
    ASSERT_EQ(r.removed.size(), 1u);
    EXPECT_EQ(r.removed[0], (std::pair<Node, Node>{3, 4}));
    EXPECT_EQ(r.partition, (Partition{0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST(GirvanNewman, TargetOneNeedsNoRemoval) {
    const auto r = girvan_newman(Graph::from_pairs(8, two_k4_bridge()), 1);
    EXPECT_TRUE(r.removed.empty());
    EXPECT_EQ(r.partition, Partition(8, 0));
    ASSERT_TRUE(r.modularity);
    EXPECT_NEAR(*r.modularity, 0.0, 1e-15);
}

TEST(GirvanNewman, CycleSplitsIntoTwoEdges) {
    const auto r = girvan_newman(Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 2);
    EXPECT_EQ(r.removed.size(), 2u);
    EXPECT_EQ(r.removed[0], (std::pair<Node, Node>{0, 1}));
    EXPECT_EQ(r.removed[1], (std::pair<Node, Node>{2, 3}));
    EXPECT_EQ(r.partition, (Partition{0, 1, 1, 0}));
}

TEST(GirvanNewman, UnreachableTargets) {
    const auto g = Graph::from_pairs(6, kTwoTriangles);
    EXPECT_THROW(girvan_newman(g, 7), std::invalid_argument);
    EXPECT_THROW(girvan_newman(g, 1), std::invalid_argument);
    EXPECT_THROW(girvan_newman(g, 0), std::invalid_argument);
    EXPECT_EQ(girvan_newman(g, 6).partition, (Partition{0, 1, 2, 3, 4, 5}));
}

TEST(GirvanNewman, BestModularityMode) {
    const auto r = girvan_newman_best(Graph::from_pairs(8, two_k4_bridge()));
    EXPECT_EQ(r.partition, (Partition{0, 0, 0, 0, 1, 1, 1, 1}));
    const auto [best_q, _] = oracle::best_partition(8, two_k4_bridge());
    EXPECT_NEAR(*r.modularity, best_q, 1e-12);
}

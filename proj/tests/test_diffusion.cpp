#include <gtest/gtest.h>

#include <snacap/netprobe/diffusion.hpp>
#include <snacap/netprobe/generators.hpp>

using namespace snacap::net;

namespace {

Graph path5() { return Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }

DiffusionParams icm(double p) {
    DiffusionParams prm;
    prm.p = p;
    return prm;
}

} // namespace

TEST(Diffusion, NeedsSeeds) {
    EXPECT_THROW(diffuse(path5(), DiffusionModel::sir, {}, {}, 1), std::invalid_argument);
    EXPECT_THROW(diffuse(path5(), DiffusionModel::sir, {}, {5}, 1), std::invalid_argument);
}

TEST(Diffusion, ValidatesProbabilities) {
    DiffusionParams prm;
    prm.beta = 1.5;
    EXPECT_THROW(diffuse(path5(), DiffusionModel::sis, prm, {0}, 1), std::invalid_argument);
    prm = {};
    prm.thresholds = {0.5, 0.5};
    EXPECT_THROW(diffuse(path5(), DiffusionModel::ltm, prm, {0}, 1), std::invalid_argument);
    prm = {};
    prm.p_from_weights = true;
    const Graph heavy(2, {{0, 1, 2.0}});
    EXPECT_THROW(diffuse(heavy, DiffusionModel::icm, prm, {0}, 1), std::invalid_argument);
}

TEST(Diffusion, IcmCascadeOnPath) {
    const auto t = diffuse(path5(), DiffusionModel::icm, icm(1.0), {0}, 42);
    ASSERT_EQ(t.states.size(), 5u);
    for (std::size_t s = 0; s < 5; ++s) {
        EXPECT_EQ(t.count(s, NodeState::active), s + 1);
        for (Node v = 0; v < 5; ++v)
            EXPECT_EQ(t.states[s][v], v <= s ? NodeState::active : NodeState::inactive);
    }
    EXPECT_TRUE(t.absorbed);
}

TEST(Diffusion, IcmWithZeroProbabilityStops) {
    const auto t = diffuse(path5(), DiffusionModel::icm, icm(0.0), {2}, 1);
    EXPECT_EQ(t.states.size(), 1u);
    EXPECT_TRUE(t.absorbed);
}

TEST(Diffusion, SirOnCompleteGraph) {
    DiffusionParams prm;
    prm.beta = 1.0;
    prm.mu = 1.0;
    const auto t = diffuse(gilbert_gnp(5, 1.0, 0), DiffusionModel::sir, prm, {0}, 3);
    ASSERT_EQ(t.states.size(), 3u);
    EXPECT_EQ(t.count(1, NodeState::infected), 4u);
    EXPECT_EQ(t.count(1, NodeState::removed), 1u);
    EXPECT_EQ(t.count(2, NodeState::removed), 5u);
    EXPECT_TRUE(t.absorbed);
}

TEST(Diffusion, EpidemicInvariants) {
    const auto g = watts_strogatz(60, 4, 0.2, 5);
    for (auto model : {DiffusionModel::sis, DiffusionModel::sir, DiffusionModel::sirs}) {
        DiffusionParams prm;
        prm.beta = 0.3;
        prm.mu = 0.2;
        prm.xi = 0.1;
        prm.steps = 80;
        const auto t = diffuse(g, model, prm, {0, 30}, 11);
        std::size_t last_r = 0;
        for (std::size_t s = 0; s < t.states.size(); ++s) {
            const auto S = t.count(s, NodeState::susceptible), I = t.count(s, NodeState::infected),
                       R = t.count(s, NodeState::removed);
            EXPECT_EQ(S + I + R, 60u);
            if (model == DiffusionModel::sis) {
                EXPECT_EQ(R, 0u);
            }
            if (model == DiffusionModel::sir) {
                EXPECT_GE(R, last_r);
                last_r = R;
            }
        }
    }
}

TEST(Diffusion, LtmZeroThresholdActivatesEveryone) {
    DiffusionParams prm;
    prm.phi = 0.0;
    const auto t = diffuse(path5(), DiffusionModel::ltm, prm, {0}, 1);
    EXPECT_EQ(t.count(t.states.size() - 1, NodeState::active), 5u);
    EXPECT_TRUE(t.absorbed);
}

TEST(Diffusion, LtmNeedsStrictlyMoreThanThreshold) {
    DiffusionParams prm;
    prm.phi = 0.5;
    // Node 1 has one of two neighbours active: exactly 0.5, not enough.
    const auto t = diffuse(path5(), DiffusionModel::ltm, prm, {0}, 1);
    EXPECT_EQ(t.states.size(), 1u);
    prm.phi = 0.49;
    const auto u = diffuse(path5(), DiffusionModel::ltm, prm, {0}, 1);
    EXPECT_EQ(u.count(u.states.size() - 1, NodeState::active), 5u);
}

TEST(Diffusion, ActiveNodesStayActive) {
    const auto g = barabasi_albert(80, 3, 2, 7);
    const auto t = diffuse(g, DiffusionModel::icm, icm(0.2), {0, 1}, 9);
    for (std::size_t s = 1; s < t.states.size(); ++s)
        for (Node v = 0; v < 80; ++v)
            if (t.states[s - 1][v] == NodeState::active) {
                EXPECT_EQ(t.states[s][v], NodeState::active);
            }
}

TEST(Diffusion, SameSeedSameTrajectory) {
    const auto g = er_gnm(50, 120, 4);
    DiffusionParams prm;
    prm.beta = 0.4;
    prm.mu = 0.3;
    prm.xi = 0.2;
    const auto a = diffuse(g, DiffusionModel::sirs, prm, {3}, 77);
    const auto b = diffuse(g, DiffusionModel::sirs, prm, {3}, 77);
    EXPECT_EQ(a.states, b.states);
    EXPECT_EQ(a.rng_seed, 77u);
}

TEST(Diffusion, ParseModelNames) {
    EXPECT_EQ(parse_diffusion_model("SIRS"), DiffusionModel::sirs);
    EXPECT_EQ(parse_diffusion_model("ltm"), DiffusionModel::ltm);
    EXPECT_FALSE(parse_diffusion_model("seir"));
}

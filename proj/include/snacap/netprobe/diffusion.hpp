#pragma once

// Spreading processes. Updates are synchronous: every node's next state is
// decided from the previous step, with random draws taken in ascending node
// order so a seed fixes the whole trajectory.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace snacap::net {

enum class DiffusionModel { sis, sir, sirs, icm, ltm };

inline std::optional<DiffusionModel> parse_diffusion_model(std::string_view s) {
    if (s == "sis" || s == "SIS") return DiffusionModel::sis;
    if (s == "sir" || s == "SIR") return DiffusionModel::sir;
    if (s == "sirs" || s == "SIRS") return DiffusionModel::sirs;
    if (s == "icm" || s == "ICM") return DiffusionModel::icm;
    if (s == "ltm" || s == "LTM") return DiffusionModel::ltm;
    return std::nullopt;
}

inline bool is_cascade_model(DiffusionModel m) {
    return m == DiffusionModel::icm || m == DiffusionModel::ltm;
}

/// Epidemic models use susceptible/infected/removed; cascade models use
/// inactive/active.
enum class NodeState : std::uint8_t { susceptible, infected, removed, inactive, active };

struct DiffusionParams {
    double beta = 0.0;  // infection per infected contact per step
    double mu = 0.0;    // cure per step
    double xi = 0.0;    // SIRS: removed back to susceptible per step
    double p = 0.0;     // ICM activation probability per edge
    bool p_from_weights = false;  // ICM: use each edge's weight instead of p
    double phi = 0.0;             // LTM threshold shared by all nodes
    std::vector<double> thresholds;  // LTM per-node thresholds; overrides phi
    std::size_t steps = 100;      // maximum number of updates
};

struct Trajectory {
    DiffusionModel model = DiffusionModel::sis;
    DiffusionParams params;
    std::uint64_t rng_seed = 0;
    /// states[0] is the initial configuration.
    std::vector<std::vector<NodeState>> states;

    std::size_t count(std::size_t step, NodeState s) const {
        return static_cast<std::size_t>(std::count(states.at(step).begin(), states.at(step).end(), s));
    }
    /// The run stopped because no further change was possible.
    bool absorbed = false;
};

namespace detail {

inline void check_probability(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
}

inline void validate_diffusion(const Graph& g, DiffusionModel model, const DiffusionParams& prm,
                               const std::vector<Node>& seeds) {
    if (seeds.empty()) throw std::invalid_argument("diffusion needs at least one seed node");
    for (Node s : seeds) require_node(g, s);
    check_probability(prm.beta, "beta");
    check_probability(prm.mu, "mu");
    check_probability(prm.xi, "xi");
    check_probability(prm.p, "p");
    check_probability(prm.phi, "phi");
    if (model == DiffusionModel::icm && prm.p_from_weights)
        for (const auto& e : g.edges()) check_probability(e.weight, "edge weight used as ICM probability");
    if (model == DiffusionModel::ltm && !prm.thresholds.empty()) {
        if (prm.thresholds.size() != g.node_count())
            throw std::invalid_argument("LTM needs one threshold per node");
        for (double t : prm.thresholds) check_probability(t, "LTM threshold");
    }
}

inline std::vector<NodeState> epidemic_step(const Graph& g, DiffusionModel model,
                                            const DiffusionParams& prm,
                                            const std::vector<NodeState>& cur, Rng& rng) {
    std::vector<NodeState> next = cur;
    for (Node v = 0; v < g.node_count(); ++v) {
        switch (cur[v]) {
        case NodeState::susceptible:
            // One independent trial per infected contact.
            for (Node w : g.in_neighbors(v)) {
                if (cur[w] == NodeState::infected && rng.bernoulli(prm.beta)) {
                    next[v] = NodeState::infected;
                    break;
                }
            }
            break;
        case NodeState::infected:
            if (rng.bernoulli(prm.mu))
                next[v] = model == DiffusionModel::sis ? NodeState::susceptible : NodeState::removed;
            break;
        case NodeState::removed:
            if (model == DiffusionModel::sirs && rng.bernoulli(prm.xi)) next[v] = NodeState::susceptible;
            break;
        default: break;
        }
    }
    return next;
}

inline bool epidemic_absorbed(DiffusionModel model, const DiffusionParams& prm,
                              const std::vector<NodeState>& cur) {
    if (std::count(cur.begin(), cur.end(), NodeState::infected) > 0) return false;
    if (model != DiffusionModel::sirs || prm.xi == 0.0) return true;
    return std::count(cur.begin(), cur.end(), NodeState::removed) == 0;
}

} // namespace detail

inline Trajectory diffuse(const Graph& g, DiffusionModel model, const DiffusionParams& prm,
                          const std::vector<Node>& seeds, std::uint64_t rng_seed) {
    detail::validate_diffusion(g, model, prm, seeds);
    const std::size_t n = g.node_count();
    Rng rng(rng_seed);
    Trajectory t;
    t.model = model;
    t.params = prm;
    t.rng_seed = rng_seed;

    const bool cascade = is_cascade_model(model);
    std::vector<NodeState> cur(n, cascade ? NodeState::inactive : NodeState::susceptible);
    for (Node s : seeds) cur[s] = cascade ? NodeState::active : NodeState::infected;
    t.states.push_back(cur);

    // ICM: nodes activated in the previous step, the only ones allowed to try.
    std::set<Node> frontier(seeds.begin(), seeds.end());

    for (std::size_t step = 0; step < prm.steps; ++step) {
        std::vector<NodeState> next;
        if (model == DiffusionModel::icm) {
            next = cur;
            std::set<Node> fresh;
            for (Node u : frontier) {
                for (Node w : g.neighbors(u)) {
                    if (cur[w] != NodeState::inactive || fresh.count(w)) continue;
                    const double p = prm.p_from_weights ? g.find_edge(u, w)->weight : prm.p;
                    if (rng.bernoulli(p)) {
                        next[w] = NodeState::active;
                        fresh.insert(w);
                    }
                }
            }
            frontier.swap(fresh);
            if (frontier.empty()) {
                t.absorbed = true;
                break;
            }
        } else if (model == DiffusionModel::ltm) {
            next = cur;
            bool changed = false;
            for (Node v = 0; v < n; ++v) {
                if (cur[v] != NodeState::inactive) continue;
                const auto nb = g.in_neighbors(v);
                if (nb.empty()) continue;
                std::size_t active = 0;
                for (Node w : nb) active += cur[w] == NodeState::active;
                const double phi = prm.thresholds.empty() ? prm.phi : prm.thresholds[v];
                if (static_cast<double>(active) / static_cast<double>(nb.size()) > phi) {
                    next[v] = NodeState::active;
                    changed = true;
                }
            }
            if (!changed) {
                t.absorbed = true;
                break;
            }
        } else {
            if (detail::epidemic_absorbed(model, prm, cur)) {
                t.absorbed = true;
                break;
            }
            next = detail::epidemic_step(g, model, prm, cur, rng);
        }
        cur = std::move(next);
        t.states.push_back(cur);
    }
    if (!t.absorbed && !cascade && detail::epidemic_absorbed(model, prm, cur)) t.absorbed = true;
    return t;
}

inline const char* to_string(NodeState s) {
    switch (s) {
    case NodeState::susceptible: return "S";
    case NodeState::infected: return "I";
    case NodeState::removed: return "R";
    case NodeState::inactive: return "inactive";
    case NodeState::active: return "active";
    }
    return "?";
}

} // namespace snacap::net

#pragma once

// Rankings, per-dimension leaderboards, Pareto fronts and distribution
// summaries over a scored tool catalog.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "capability.hpp"
#include "rubric_io.hpp"

namespace snacap {

struct ToolScores {
    std::string name;
    License license = License::open_source;
    PartialScores scores;
};

struct ScoredCatalog {
    std::vector<ToolScores> tools;
    /// Raw rubrics that could not be scored, with the reason.
    std::vector<std::pair<std::string, std::string>> rejected;
};

/// Raw rubrics are scored with `w`; published degrees are taken as is.
inline ScoredCatalog score_catalog(const ToolCatalog& catalog, const Weights& w = {}) {
    ScoredCatalog out;
    for (const auto& entry : catalog.entries) {
        if (const auto* r = std::get_if<Rubric>(&entry)) {
            try {
                const DimensionScores s = score_rubric(*r, w);
                out.tools.push_back(
                    {r->tool_name, r->license, {s.d_value, s.d_volume, s.d_variety, s.d_visual}});
            } catch (const std::invalid_argument& e) {
                out.rejected.emplace_back(r->tool_name, e.what());
            }
        } else {
            const auto& p = std::get<PublishedScores>(entry);
            out.tools.push_back({p.tool_name, p.license, p.scores});
        }
    }
    return out;
}

struct RankedEntry {
    std::string tool_name;
    License license = License::open_source;
    CapabilityScore capability;
    DimensionScores scores;

    friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct RankedList {
    std::vector<RankedEntry> entries;
    /// Tools lacking one or more degrees; excluded from the ordering.
    std::vector<std::string> unassessed;

    friend bool operator==(const RankedList&, const RankedList&) = default;
};

/// Orders by normalized C4 (descending, ties by name). Degenerate scores have
/// no normalized value and are placed after every full_4d tool, by raw C4.
inline RankedList rank(const std::vector<ToolScores>& tools,
                       std::optional<License> license_filter = std::nullopt) {
    RankedList out;
    for (const auto& t : tools) {
        if (license_filter && t.license != *license_filter) continue;
        auto full = t.scores.complete();
        if (!full) {
            out.unassessed.push_back(t.name);
            continue;
        }
        out.entries.push_back({t.name, t.license, capability_c4(*full), *full});
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
        const bool fa = a.capability.normalized.has_value();
        const bool fb = b.capability.normalized.has_value();
        if (fa != fb) return fa;
        const double ka = fa ? *a.capability.normalized : a.capability.raw;
        const double kb = fb ? *b.capability.normalized : b.capability.raw;
        if (ka != kb) return ka > kb;
        return a.tool_name < b.tool_name;
    });
    std::sort(out.unassessed.begin(), out.unassessed.end());
    return out;
}

struct DimensionEntry {
    std::string tool_name;
    double score = 0.0;

    friend bool operator==(const DimensionEntry&, const DimensionEntry&) = default;
};

inline std::vector<DimensionEntry> top_k_by_dimension(const std::vector<ToolScores>& tools,
                                                      Dimension dim, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    std::vector<DimensionEntry> all;
    for (const auto& t : tools)
        if (const auto& x = t.scores.get(dim)) all.push_back({t.name, *x});
    std::sort(all.begin(), all.end(), [](const DimensionEntry& a, const DimensionEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.tool_name < b.tool_name;
    });
    if (all.size() > k) all.resize(k);
    return all;
}

struct ParetoPoint {
    std::string tool_name;
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

struct ParetoResult {
    Dimension axis_x = Dimension::value;
    Dimension axis_y = Dimension::volume;
    /// Sorted by name.
    std::vector<ParetoPoint> front;
    std::vector<ParetoPoint> dominated;

    friend bool operator==(const ParetoResult&, const ParetoResult&) = default;
};

/// a dominates b when it is no worse on both axes and strictly better on one.
inline bool dominates(double ax, double ay, double bx, double by) {
    return ax >= bx && ay >= by && (ax > bx || ay > by);
}

/// Two-objective maximization front. Tools missing either axis are skipped.
inline ParetoResult pareto_front(const std::vector<ToolScores>& tools, Dimension axis_x,
                                 Dimension axis_y) {
    if (axis_x == axis_y) throw std::invalid_argument("pareto axes must differ");
    std::vector<ParetoPoint> pts;
    for (const auto& t : tools) {
        const auto& x = t.scores.get(axis_x);
        const auto& y = t.scores.get(axis_y);
        if (x && y) pts.push_back({t.name, *x, *y});
    }
    std::sort(pts.begin(), pts.end(),
              [](const ParetoPoint& a, const ParetoPoint& b) { return a.tool_name < b.tool_name; });

    // Sweep in descending x (then descending y); a point is on the front iff
    // its y beats every y seen at strictly greater x, or ties the running
    // best only when that best came from the same (x, y).
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x != pts[b].x) return pts[a].x > pts[b].x;
        return pts[a].y > pts[b].y;
    });
    std::vector<bool> on_front(pts.size(), false);
    double best_y = -1.0;
    double best_x = 0.0;
    for (std::size_t idx : order) {
        const auto& p = pts[idx];
        if (p.y > best_y) {
            on_front[idx] = true;
            best_y = p.y;
            best_x = p.x;
        } else if (p.y == best_y && p.x == best_x) {
            on_front[idx] = true; // duplicate of a front point
        }
    }

    ParetoResult r;
    r.axis_x = axis_x;
    r.axis_y = axis_y;
    for (std::size_t i = 0; i < pts.size(); ++i)
        (on_front[i] ? r.front : r.dominated).push_back(pts[i]);
    return r;
}

struct Summary {
    std::size_t count = 0;
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
    double mean = 0.0;

    friend bool operator==(const Summary&, const Summary&) = default;
};

/// Quantile by linear interpolation between order statistics at position
/// (n-1)p (the inclusive method).
inline double quantile_inclusive(std::vector<double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
    std::sort(sorted.begin(), sorted.end());
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline Summary summarize(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("cannot summarize an empty sample");
    std::sort(xs.begin(), xs.end());
    Summary s;
    s.count = xs.size();
    s.min = xs.front();
    s.max = xs.back();
    s.q1 = quantile_inclusive(xs, 0.25);
    s.median = quantile_inclusive(xs, 0.5);
    s.q3 = quantile_inclusive(xs, 0.75);
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    return s;
}

struct DistributionStats {
    /// Dimensions with no scored tool are absent.
    std::map<Dimension, Summary> per_dimension;

    friend bool operator==(const DistributionStats&, const DistributionStats&) = default;
};

inline DistributionStats distribution_stats(const std::vector<ToolScores>& tools) {
    DistributionStats out;
    for (Dimension d : kDimensions) {
        std::vector<double> xs;
        for (const auto& t : tools)
            if (const auto& x = t.scores.get(d)) xs.push_back(*x);
        if (!xs.empty()) out.per_dimension[d] = summarize(std::move(xs));
    }
    if (out.per_dimension.empty()) throw std::invalid_argument("no scored tools");
    return out;
}

} // namespace snacap

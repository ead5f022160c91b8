#pragma once

// Capability scoring for social-network-analysis software: the four
// dimension degrees (value, volume, variety, visual), the C4 area metric
// and two throughput-based scalability models.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace snacap {

/// Three-step ordinal scale used by the volume features.
enum class Band { low, medium, large };

enum class Representation { basic, intermediate, advanced };

enum class License { proprietary, open_source };

enum class VisualVariable { position, size, shape, orientation, color, saturation, texture };

enum class Interaction { zoom, filter, highlight, grouping, multiview };

inline constexpr std::size_t kVisualVariableCount = 7;
inline constexpr std::size_t kInteractionCount = 5;

/// Canonical topology-measure vocabulary. Anything else is rejected by
/// rubric validation.
inline constexpr std::array<std::string_view, 9> kTopologyMeasures = {
    "diameter",     "mean_degree",    "degree_distribution",
    "clustering_coefficient", "connected_components", "transitivity",
    "triangle_count", "density",      "centrality_suite"};

inline constexpr std::size_t kTopologyCap = 5;
inline constexpr std::size_t kLinkAnalysisCap = 4;

inline bool is_topology_measure(std::string_view name) {
    return std::find(kTopologyMeasures.begin(), kTopologyMeasures.end(), name) !=
           kTopologyMeasures.end();
}

struct CommunityDetection {
    bool static_non_overlapping = false;
    bool static_overlapping = false;
    bool temporal = false;

    friend bool operator==(const CommunityDetection&, const CommunityDetection&) = default;
};

struct ValueFeatures {
    std::set<std::string> topology_measures;
    std::set<std::string> link_analysis;
    CommunityDetection community_detection;
    bool topic_detection = false;
    bool sentiment_analysis = false;
    bool homophily = false;
    bool virality = false;
    bool link_prediction = false;

    friend bool operator==(const ValueFeatures&, const ValueFeatures&) = default;
};

struct VolumeFeatures {
    Band space_time = Band::low;
    Band parallelism = Band::low;
    Band functional = Band::low;
    Band heterogeneous_integration = Band::low;

    friend bool operator==(const VolumeFeatures&, const VolumeFeatures&) = default;
};

struct VarietyFeatures {
    unsigned data_type_count = 0;
    unsigned osn_count = 0;
    Representation representation = Representation::basic;

    friend bool operator==(const VarietyFeatures&, const VarietyFeatures&) = default;
};

struct VisualFeatures {
    std::set<VisualVariable> visual_variables;
    std::set<Interaction> interactions;

    friend bool operator==(const VisualFeatures&, const VisualFeatures&) = default;
};

struct Rubric {
    std::string tool_name;
    License license = License::open_source;
    ValueFeatures value;
    VolumeFeatures volume;
    VarietyFeatures variety;
    VisualFeatures visual;

    friend bool operator==(const Rubric&, const Rubric&) = default;
};

/// Per-group and per-feature weights. Defaults give every group and every
/// feature the same importance.
struct Weights {
    double value_alpha = 1.0 / 3.0;
    double value_beta = 1.0 / 3.0;
    double value_gamma = 1.0 / 3.0;
    double visual_alpha = 0.5;
    double visual_beta = 0.5;
    std::array<double, kVisualVariableCount> visual_variable_weights{1, 1, 1, 1, 1, 1, 1};
    std::array<double, kInteractionCount> interaction_weights{1, 1, 1, 1, 1};
};

struct DimensionScores {
    double d_value = 0.0;
    double d_volume = 0.0;
    double d_variety = 0.0;
    double d_visual = 0.0;

    friend bool operator==(const DimensionScores&, const DimensionScores&) = default;
};

/// The four assessment axes.
enum class Dimension { value, volume, variety, visual };

inline constexpr std::array<Dimension, 4> kDimensions{Dimension::value, Dimension::volume,
                                                      Dimension::variety, Dimension::visual};

inline double get(const DimensionScores& s, Dimension d) {
    switch (d) {
    case Dimension::value: return s.d_value;
    case Dimension::volume: return s.d_volume;
    case Dimension::variety: return s.d_variety;
    case Dimension::visual: return s.d_visual;
    }
    return 0.0;
}

enum class Degeneracy {
    full_4d,
    projected_2d,
    single_dimension,
    /// every degree is zero; there is no polygon and no dimension to report
    empty,
};

struct CapabilityScore {
    double raw = 0.0;
    std::optional<double> normalized;
    Degeneracy degeneracy = Degeneracy::full_4d;

    friend bool operator==(const CapabilityScore&, const CapabilityScore&) = default;
};

/// Thrown when a feature record cannot be scored (e.g. unassessed counts).
class ScoringError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline double band_value(Band b) {
    switch (b) {
    case Band::low: return 1.0 / 3.0;
    case Band::medium: return 2.0 / 3.0;
    case Band::large: return 1.0;
    }
    return 0.0;
}

inline double representation_value(Representation r) {
    switch (r) {
    case Representation::basic: return 1.0 / 3.0;
    case Representation::intermediate: return 2.0 / 3.0;
    case Representation::advanced: return 1.0;
    }
    return 0.0;
}

/// Count banding shared by data-type and OSN counts: 1 -> 1/3, 2..3 -> 2/3,
/// 4+ -> 1. Zero means "not assessed".
inline double count_band_value(unsigned count) {
    if (count == 0) throw ScoringError("count of 0 is unassessed and cannot be banded");
    if (count == 1) return 1.0 / 3.0;
    if (count <= 3) return 2.0 / 3.0;
    return 1.0;
}

namespace detail {

inline void require_non_negative(double w, const char* what) {
    if (!(w >= 0.0) || !std::isfinite(w))
        throw std::invalid_argument(std::string("weight must be non-negative: ") + what);
}

inline void check_weights(const Weights& w) {
    require_non_negative(w.value_alpha, "value_alpha");
    require_non_negative(w.value_beta, "value_beta");
    require_non_negative(w.value_gamma, "value_gamma");
    require_non_negative(w.visual_alpha, "visual_alpha");
    require_non_negative(w.visual_beta, "visual_beta");
    for (double g : w.visual_variable_weights) require_non_negative(g, "visual_variable_weights");
    for (double t : w.interaction_weights) require_non_negative(t, "interaction_weights");
}

} // namespace detail

/// Community-detection sub-score: one kind earns 1/3, both static kinds a
/// further 1/3, temporal support a further 1/3.
inline double community_detection_score(const CommunityDetection& cd) {
    const bool any = cd.static_non_overlapping || cd.static_overlapping || cd.temporal;
    double s = 0.0;
    if (any) s += 1.0 / 3.0;
    if (cd.static_non_overlapping && cd.static_overlapping) s += 1.0 / 3.0;
    if (cd.temporal) s += 1.0 / 3.0;
    return s;
}

inline double score_value(const ValueFeatures& f, const Weights& w = {}) {
    detail::check_weights(w);
    const double topology =
        static_cast<double>(std::min(f.topology_measures.size(), kTopologyCap)) / kTopologyCap;
    const double link =
        static_cast<double>(std::min(f.link_analysis.size(), kLinkAnalysisCap)) / kLinkAnalysisCap;
    const double community = community_detection_score(f.community_detection);
    const double opinion = (f.topic_detection ? 0.5 : 0.0) + (f.sentiment_analysis ? 0.5 : 0.0);
    const double homophily = f.homophily ? 1.0 : 0.0;
    const double virality = f.virality ? 1.0 : 0.0;
    const double prediction = f.link_prediction ? 1.0 : 0.0;

    return w.value_alpha * (topology + link) / 2.0 +
           w.value_beta * (community + opinion + homophily) / 3.0 +
           w.value_gamma * (virality + prediction) / 2.0;
}

inline double score_volume(const VolumeFeatures& f) {
    return (band_value(f.space_time) + band_value(f.parallelism) + band_value(f.functional) +
            band_value(f.heterogeneous_integration)) /
           4.0;
}

inline double score_variety(const VarietyFeatures& f) {
    if (f.data_type_count == 0) throw ScoringError("variety.data_type_count is 0 (unassessed)");
    if (f.osn_count == 0) throw ScoringError("variety.osn_count is 0 (unassessed)");
    return (count_band_value(f.data_type_count) + count_band_value(f.osn_count) +
            representation_value(f.representation)) /
           3.0;
}

inline double score_visual(const VisualFeatures& f, const Weights& w = {}) {
    detail::check_weights(w);
    double variables = 0.0;
    for (VisualVariable v : f.visual_variables)
        variables += w.visual_variable_weights[static_cast<std::size_t>(v)];
    double interactions = 0.0;
    for (Interaction i : f.interactions)
        interactions += w.interaction_weights[static_cast<std::size_t>(i)];
    return w.visual_alpha * variables / kVisualVariableCount +
           w.visual_beta * interactions / kInteractionCount;
}

inline DimensionScores score_rubric(const Rubric& r, const Weights& w = {}) {
    return DimensionScores{score_value(r.value, w), score_volume(r.volume), score_variety(r.variety),
                           score_visual(r.visual, w)};
}

/// C4: area of the radar quadrilateral spanned by the four degrees.
///
/// The full case is 1/2 (d_value + d_volume)(d_variety + d_visual) with a
/// table-normalized value of raw/2. When one axis pair is entirely zero the
/// polygon collapses; two remaining degrees are projected onto orthogonal
/// axes (raw = 1/2 d_i d_j), and a single remaining degree is reported as is.
/// Degenerate cases carry no normalized value.
inline CapabilityScore capability_c4(const DimensionScores& s) {
    const std::array<double, 4> d{s.d_value, s.d_volume, s.d_variety, s.d_visual};
    for (double x : d) {
        if (!(x >= 0.0 && x <= 1.0))
            throw std::invalid_argument("dimension degree outside [0,1]");
    }
    const double pair_a = s.d_value + s.d_volume;
    const double pair_b = s.d_variety + s.d_visual;
    if (pair_a > 0.0 && pair_b > 0.0) {
        const double raw = 0.5 * pair_a * pair_b;
        return {raw, raw / 2.0, Degeneracy::full_4d};
    }

    double product = 1.0;
    int nonzero = 0;
    for (double x : d) {
        if (x > 0.0) {
            product *= x;
            ++nonzero;
        }
    }
    if (nonzero == 2) return {0.5 * product, std::nullopt, Degeneracy::projected_2d};
    if (nonzero == 1) return {product, std::nullopt, Degeneracy::single_dimension};
    return {0.0, std::nullopt, Degeneracy::empty};
}

/// Universal Scalability Law: throughput at load n.
inline double usl_throughput(double gamma, double alpha, double beta, double n) {
    if (!(n >= 1.0)) throw std::invalid_argument("usl load n must be >= 1");
    if (!(gamma >= 0.0) || !(alpha >= 0.0) || !(beta >= 0.0))
        throw std::invalid_argument("usl parameters must be non-negative");
    return gamma * n / (1.0 + alpha * (n - 1.0) + beta * n * (n - 1.0));
}

/// Throughput divided by mean delay.
inline double power_metric(double throughput, double mean_delay) {
    if (!(mean_delay > 0.0)) throw std::invalid_argument("mean delay must be positive");
    return throughput / mean_delay;
}

/// Round half-up to `digits` decimals. The small bias absorbs binary
/// representation error so that 0.285 rounds to 0.29.
inline double round_half_up(double x, int digits = 2) {
    const double scale = std::pow(10.0, digits);
    return std::floor(x * scale + 0.5 + 1e-9) / scale;
}

// Names used in files and on the command line.

inline std::string_view to_string(Band b) {
    switch (b) {
    case Band::low: return "low";
    case Band::medium: return "medium";
    case Band::large: return "large";
    }
    return "";
}

inline std::string_view to_string(Representation r) {
    switch (r) {
    case Representation::basic: return "basic";
    case Representation::intermediate: return "intermediate";
    case Representation::advanced: return "advanced";
    }
    return "";
}

inline std::string_view to_string(License l) {
    return l == License::proprietary ? "proprietary" : "open_source";
}

inline std::string_view to_string(VisualVariable v) {
    static constexpr std::array<std::string_view, kVisualVariableCount> names{
        "position", "size", "shape", "orientation", "color", "saturation", "texture"};
    return names[static_cast<std::size_t>(v)];
}

inline std::string_view to_string(Interaction i) {
    static constexpr std::array<std::string_view, kInteractionCount> names{
        "zoom", "filter", "highlight", "grouping", "multiview"};
    return names[static_cast<std::size_t>(i)];
}

inline std::string_view to_string(Degeneracy d) {
    switch (d) {
    case Degeneracy::full_4d: return "full_4d";
    case Degeneracy::projected_2d: return "projected_2d";
    case Degeneracy::single_dimension: return "single_dimension";
    case Degeneracy::empty: return "empty";
    }
    return "";
}

inline std::optional<Band> parse_band(std::string_view s) {
    if (s == "low") return Band::low;
    if (s == "medium") return Band::medium;
    if (s == "large") return Band::large;
    return std::nullopt;
}

inline std::optional<Representation> parse_representation(std::string_view s) {
    if (s == "basic") return Representation::basic;
    if (s == "intermediate") return Representation::intermediate;
    if (s == "advanced") return Representation::advanced;
    return std::nullopt;
}

inline std::optional<License> parse_license(std::string_view s) {
    if (s == "proprietary") return License::proprietary;
    if (s == "open_source") return License::open_source;
    return std::nullopt;
}

inline std::optional<VisualVariable> parse_visual_variable(std::string_view s) {
    for (std::size_t i = 0; i < kVisualVariableCount; ++i) {
        auto v = static_cast<VisualVariable>(i);
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

inline std::optional<Interaction> parse_interaction(std::string_view s) {
    for (std::size_t i = 0; i < kInteractionCount; ++i) {
        auto v = static_cast<Interaction>(i);
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

inline std::optional<Degeneracy> parse_degeneracy(std::string_view s) {
    for (auto d : {Degeneracy::full_4d, Degeneracy::projected_2d, Degeneracy::single_dimension,
                   Degeneracy::empty}) {
        if (to_string(d) == s) return d;
    }
    return std::nullopt;
}

inline std::string_view to_string(Dimension d) {
    switch (d) {
    case Dimension::value: return "value";
    case Dimension::volume: return "volume";
    case Dimension::variety: return "variety";
    case Dimension::visual: return "visual";
    }
    return "";
}

/// Accepts the short names and the descriptive dimension titles.
inline std::optional<Dimension> parse_dimension(std::string_view s) {
    if (s == "value" || s == "d_value" || s == "knowledge_discovery") return Dimension::value;
    if (s == "volume" || s == "d_volume" || s == "scalability") return Dimension::volume;
    if (s == "variety" || s == "d_variety" || s == "information_fusion") return Dimension::variety;
    if (s == "visual" || s == "d_visual" || s == "visualization") return Dimension::visual;
    return std::nullopt;
}

} // namespace snacap

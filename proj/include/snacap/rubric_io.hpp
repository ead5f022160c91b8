#pragma once

// JSON catalogs of tool assessments: either raw rubrics or published
// dimension degrees. Parsing never throws on bad input; it returns
// path-qualified diagnostics instead.

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "capability.hpp"

namespace snacap {

/// Degrees as printed by a source. Any dimension may be missing.
struct PartialScores {
    std::optional<double> d_value;
    std::optional<double> d_volume;
    std::optional<double> d_variety;
    std::optional<double> d_visual;

    const std::optional<double>& get(Dimension d) const {
        switch (d) {
        case Dimension::value: return d_value;
        case Dimension::volume: return d_volume;
        case Dimension::variety: return d_variety;
        case Dimension::visual: return d_visual;
        }
        return d_value;
    }

    std::optional<DimensionScores> complete() const {
        if (!d_value || !d_volume || !d_variety || !d_visual) return std::nullopt;
        return DimensionScores{*d_value, *d_volume, *d_variety, *d_visual};
    }

    friend bool operator==(const PartialScores&, const PartialScores&) = default;
};

struct PublishedScores {
    std::string tool_name;
    License license = License::open_source;
    PartialScores scores;
    std::string source;

    friend bool operator==(const PublishedScores&, const PublishedScores&) = default;
};

using ToolEntry = std::variant<Rubric, PublishedScores>;

inline const std::string& entry_name(const ToolEntry& e) {
    return std::visit([](const auto& x) -> const std::string& { return x.tool_name; }, e);
}

inline License entry_license(const ToolEntry& e) {
    return std::visit([](const auto& x) { return x.license; }, e);
}

struct ToolCatalog {
    std::vector<ToolEntry> entries;

    const ToolEntry* find(std::string_view name) const {
        for (const auto& e : entries)
            if (entry_name(e) == name) return &e;
        return nullptr;
    }

    friend bool operator==(const ToolCatalog&, const ToolCatalog&) = default;
};

enum class Severity { error, warning };

struct Diagnostic {
    Severity severity = Severity::error;
    std::string path;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline std::string format_diagnostic(const Diagnostic& d) {
    return std::string(d.severity == Severity::error ? "error" : "warning") + ": " +
           (d.path.empty() ? std::string("<document>") : d.path) + ": " + d.message;
}

inline bool has_errors(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds)
        if (d.severity == Severity::error) return true;
    return false;
}

/// Checks a rubric against the scoring invariants. Warnings flag inputs that
/// score fine but lose information (counts above a cap).
inline std::vector<Diagnostic> validate_rubric(const Rubric& r, const std::string& path = "") {
    std::vector<Diagnostic> out;
    auto at = [&](std::string_view field) {
        return path.empty() ? std::string(field) : path + "." + std::string(field);
    };
    if (r.tool_name.empty()) out.push_back({Severity::error, at("name"), "tool name is empty"});

    std::size_t i = 0;
    for (const auto& m : r.value.topology_measures) {
        if (!is_topology_measure(m))
            out.push_back({Severity::error,
                           at("value.topology_measures[" + std::to_string(i) + "]"),
                           "unknown topology measure '" + m + "'"});
        ++i;
    }
    if (r.value.topology_measures.size() > kTopologyCap)
        out.push_back({Severity::warning, at("value.topology_measures"),
                       std::to_string(r.value.topology_measures.size()) +
                           " measures listed; count capped at 5"});
    i = 0;
    for (const auto& a : r.value.link_analysis) {
        if (a.empty())
            out.push_back({Severity::error, at("value.link_analysis[" + std::to_string(i) + "]"),
                           "empty algorithm name"});
        ++i;
    }
    if (r.value.link_analysis.size() > kLinkAnalysisCap)
        out.push_back({Severity::warning, at("value.link_analysis"),
                       std::to_string(r.value.link_analysis.size()) +
                           " algorithms listed; count capped at 4"});
    if (r.variety.data_type_count == 0)
        out.push_back({Severity::error, at("variety.data_type_count"),
                       "must be >= 1 (0 means unassessed)"});
    if (r.variety.osn_count == 0)
        out.push_back(
            {Severity::error, at("variety.osn_count"), "must be >= 1 (0 means unassessed)"});
    return out;
}

struct ParseResult {
    std::optional<ToolCatalog> catalog;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return catalog.has_value(); }
};

namespace detail {

using ojson = nlohmann::ordered_json;

class CatalogReader {
  public:
    std::vector<Diagnostic> diags;

    void error(const std::string& path, std::string msg) {
        diags.push_back({Severity::error, path, std::move(msg)});
    }

    const ojson* member(const ojson& obj, const std::string& path, const char* key,
                        bool required = true) {
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) error(path + "." + key, "missing field");
            return nullptr;
        }
        return &*it;
    }

    std::optional<std::string> string_at(const ojson& obj, const std::string& path,
                                         const char* key) {
        const ojson* v = member(obj, path, key);
        if (!v) return std::nullopt;
        if (!v->is_string()) {
            error(path + "." + key, "expected a string");
            return std::nullopt;
        }
        return v->get<std::string>();
    }

    bool bool_at(const ojson& obj, const std::string& path, const char* key) {
        const ojson* v = member(obj, path, key);
        if (!v) return false;
        if (!v->is_boolean()) {
            error(path + "." + key, "expected true or false");
            return false;
        }
        return v->get<bool>();
    }

    unsigned count_at(const ojson& obj, const std::string& path, const char* key) {
        const ojson* v = member(obj, path, key);
        if (!v) return 0;
        if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0)) {
            error(path + "." + key, "expected a non-negative integer");
            return 0;
        }
        return v->get<unsigned>();
    }

    std::vector<std::string> strings_at(const ojson& obj, const std::string& path,
                                        const char* key) {
        std::vector<std::string> out;
        const ojson* v = member(obj, path, key);
        if (!v) return out;
        const std::string p = path + "." + key;
        if (!v->is_array()) {
            error(p, "expected an array of strings");
            return out;
        }
        std::set<std::string> seen;
        for (std::size_t i = 0; i < v->size(); ++i) {
            const auto& item = (*v)[i];
            const std::string ip = p + "[" + std::to_string(i) + "]";
            if (!item.is_string()) {
                error(ip, "expected a string");
                continue;
            }
            auto s = item.get<std::string>();
            if (!seen.insert(s).second) error(ip, "duplicate entry '" + s + "'");
            out.push_back(std::move(s));
        }
        return out;
    }

    template <class Enum, class Parse>
    std::optional<Enum> enum_at(const ojson& obj, const std::string& path, const char* key,
                                Parse parse, const char* allowed) {
        auto s = string_at(obj, path, key);
        if (!s) return std::nullopt;
        auto e = parse(*s);
        if (!e) error(path + "." + key, "unknown value '" + *s + "' (expected " + allowed + ")");
        return e;
    }

    const ojson* object_at(const ojson& obj, const std::string& path, const char* key) {
        const ojson* v = member(obj, path, key);
        if (v && !v->is_object()) {
            error(path + "." + key, "expected an object");
            return nullptr;
        }
        return v;
    }

    std::optional<Rubric> rubric(const ojson& e, const std::string& p) {
        const std::size_t before = diags.size();
        Rubric r;
        r.tool_name = string_at(e, p, "name").value_or("");
        r.license = enum_at<License>(e, p, "license", parse_license, "proprietary|open_source")
                        .value_or(License::open_source);

        if (const ojson* v = object_at(e, p, "value")) {
            const std::string vp = p + ".value";
            auto topo = strings_at(*v, vp, "topology_measures");
            r.value.topology_measures = {topo.begin(), topo.end()};
            for (std::size_t i = 0; i < topo.size(); ++i)
                if (!is_topology_measure(topo[i]))
                    error(vp + ".topology_measures[" + std::to_string(i) + "]",
                          "unknown topology measure '" + topo[i] + "'");
            auto link = strings_at(*v, vp, "link_analysis");
            r.value.link_analysis = {link.begin(), link.end()};
            if (const ojson* cd = object_at(*v, vp, "community_detection")) {
                const std::string cp = vp + ".community_detection";
                r.value.community_detection.static_non_overlapping =
                    bool_at(*cd, cp, "static_non_overlapping");
                r.value.community_detection.static_overlapping =
                    bool_at(*cd, cp, "static_overlapping");
                r.value.community_detection.temporal = bool_at(*cd, cp, "temporal");
            }
            r.value.topic_detection = bool_at(*v, vp, "topic_detection");
            r.value.sentiment_analysis = bool_at(*v, vp, "sentiment_analysis");
            r.value.homophily = bool_at(*v, vp, "homophily");
            r.value.virality = bool_at(*v, vp, "virality");
            r.value.link_prediction = bool_at(*v, vp, "link_prediction");
        }
        if (const ojson* v = object_at(e, p, "volume")) {
            const std::string vp = p + ".volume";
            constexpr const char* bands = "low|medium|large";
            r.volume.space_time =
                enum_at<Band>(*v, vp, "space_time", parse_band, bands).value_or(Band::low);
            r.volume.parallelism =
                enum_at<Band>(*v, vp, "parallelism", parse_band, bands).value_or(Band::low);
            r.volume.functional =
                enum_at<Band>(*v, vp, "functional", parse_band, bands).value_or(Band::low);
            r.volume.heterogeneous_integration =
                enum_at<Band>(*v, vp, "heterogeneous", parse_band, bands).value_or(Band::low);
        }
        if (const ojson* v = object_at(e, p, "variety")) {
            const std::string vp = p + ".variety";
            r.variety.data_type_count = count_at(*v, vp, "data_type_count");
            r.variety.osn_count = count_at(*v, vp, "osn_count");
            r.variety.representation =
                enum_at<Representation>(*v, vp, "representation", parse_representation,
                                        "basic|intermediate|advanced")
                    .value_or(Representation::basic);
        }
        if (const ojson* v = object_at(e, p, "visual")) {
            const std::string vp = p + ".visual";
            auto vars = strings_at(*v, vp, "variables");
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (auto x = parse_visual_variable(vars[i]))
                    r.visual.visual_variables.insert(*x);
                else
                    error(vp + ".variables[" + std::to_string(i) + "]",
                          "unknown visual variable '" + vars[i] + "'");
            }
            auto inter = strings_at(*v, vp, "interactions");
            for (std::size_t i = 0; i < inter.size(); ++i) {
                if (auto x = parse_interaction(inter[i]))
                    r.visual.interactions.insert(*x);
                else
                    error(vp + ".interactions[" + std::to_string(i) + "]",
                          "unknown interaction '" + inter[i] + "'");
            }
        }
        // Structural checks already reported unknown names; keep only the
        // remaining rubric-level findings (empty name, zero counts, caps).
        for (auto& d : validate_rubric(r, p)) {
            if (d.message.rfind("unknown topology measure", 0) == 0) continue;
            diags.push_back(std::move(d));
        }
        if (has_errors({diags.begin() + static_cast<std::ptrdiff_t>(before), diags.end()}))
            return std::nullopt;
        return r;
    }

    std::optional<PublishedScores> published(const ojson& e, const std::string& p) {
        const std::size_t before = diags.size();
        PublishedScores s;
        s.tool_name = string_at(e, p, "name").value_or("");
        if (s.tool_name.empty() && diags.size() == before) error(p + ".name", "tool name is empty");
        s.license = enum_at<License>(e, p, "license", parse_license, "proprietary|open_source")
                        .value_or(License::open_source);
        if (const ojson* src = member(e, p, "source", false)) {
            if (src->is_string())
                s.source = src->get<std::string>();
            else
                error(p + ".source", "expected a string");
        }
        if (const ojson* sc = object_at(e, p, "scores")) {
            const std::string sp = p + ".scores";
            for (Dimension d : kDimensions) {
                const std::string key = "d_" + std::string(to_string(d));
                auto it = sc->find(key);
                if (it == sc->end() || it->is_null()) continue;
                if (!it->is_number()) {
                    error(sp + "." + key, "expected a number");
                    continue;
                }
                const double x = it->get<double>();
                if (!(x >= 0.0 && x <= 1.0)) {
                    error(sp + "." + key, "degree outside [0,1]");
                    continue;
                }
                switch (d) {
                case Dimension::value: s.scores.d_value = x; break;
                case Dimension::volume: s.scores.d_volume = x; break;
                case Dimension::variety: s.scores.d_variety = x; break;
                case Dimension::visual: s.scores.d_visual = x; break;
                }
            }
            for (const auto& [key, _] : sc->items()) {
                if (!parse_dimension(key) || key.rfind("d_", 0) != 0)
                    error(sp + "." + key, "unknown score key");
            }
        }
        if (diags.size() != before && has_errors({diags.begin() + static_cast<std::ptrdiff_t>(before),
                                                  diags.end()}))
            return std::nullopt;
        return s;
    }
};

inline ojson rubric_to_json(const Rubric& r) {
    ojson j;
    j["name"] = r.tool_name;
    j["license"] = to_string(r.license);
    ojson v;
    v["topology_measures"] = r.value.topology_measures;
    v["link_analysis"] = r.value.link_analysis;
    v["community_detection"] = {
        {"static_non_overlapping", r.value.community_detection.static_non_overlapping},
        {"static_overlapping", r.value.community_detection.static_overlapping},
        {"temporal", r.value.community_detection.temporal}};
    v["topic_detection"] = r.value.topic_detection;
    v["sentiment_analysis"] = r.value.sentiment_analysis;
    v["homophily"] = r.value.homophily;
    v["virality"] = r.value.virality;
    v["link_prediction"] = r.value.link_prediction;
    j["value"] = std::move(v);
    j["volume"] = {{"space_time", to_string(r.volume.space_time)},
                   {"parallelism", to_string(r.volume.parallelism)},
                   {"functional", to_string(r.volume.functional)},
                   {"heterogeneous", to_string(r.volume.heterogeneous_integration)}};
    j["variety"] = {{"data_type_count", r.variety.data_type_count},
                    {"osn_count", r.variety.osn_count},
                    {"representation", to_string(r.variety.representation)}};
    ojson vars = ojson::array();
    for (auto x : r.visual.visual_variables) vars.push_back(to_string(x));
    ojson inter = ojson::array();
    for (auto x : r.visual.interactions) inter.push_back(to_string(x));
    j["visual"] = {{"variables", std::move(vars)}, {"interactions", std::move(inter)}};
    return j;
}

inline ojson published_to_json(const PublishedScores& s) {
    ojson j;
    j["name"] = s.tool_name;
    j["license"] = to_string(s.license);
    ojson sc = ojson::object();
    for (Dimension d : kDimensions) {
        if (const auto& x = s.scores.get(d)) sc["d_" + std::string(to_string(d))] = *x;
    }
    j["scores"] = std::move(sc);
    j["source"] = s.source;
    return j;
}

} // namespace detail

/// A raw entry is recognised by its "value" object; a published one by
/// its "scores" object.
inline ParseResult parse_catalog(std::string_view document) {
    using detail::ojson;
    ParseResult result;
    ojson doc;
    try {
        doc = ojson::parse(document.begin(), document.end());
    } catch (const ojson::exception& e) {
        result.diagnostics.push_back({Severity::error, "", std::string("malformed JSON: ") + e.what()});
        return result;
    }
    if (!doc.is_object()) {
        result.diagnostics.push_back({Severity::error, "", "top level must be an object"});
        return result;
    }
    auto tools = doc.find("tools");
    if (tools == doc.end() || !tools->is_array()) {
        result.diagnostics.push_back({Severity::error, "tools", "missing or non-array 'tools'"});
        return result;
    }

    detail::CatalogReader reader;
    ToolCatalog catalog;
    std::set<std::string> names;
    bool ok = true;
    for (std::size_t i = 0; i < tools->size(); ++i) {
        const auto& e = (*tools)[i];
        const std::string p = "tools[" + std::to_string(i) + "]";
        if (!e.is_object()) {
            reader.error(p, "expected an object");
            ok = false;
            continue;
        }
        const bool raw = e.contains("value");
        const bool pub = e.contains("scores");
        if (raw == pub) {
            reader.error(p, raw ? "entry has both 'value' and 'scores'"
                                : "entry has neither 'value' (raw rubric) nor 'scores' (published)");
            ok = false;
            continue;
        }
        std::optional<ToolEntry> entry;
        if (raw) {
            if (auto r = reader.rubric(e, p)) entry = std::move(*r);
        } else {
            if (auto s = reader.published(e, p)) entry = std::move(*s);
        }
        if (!entry) {
            ok = false;
            continue;
        }
        if (!names.insert(entry_name(*entry)).second) {
            reader.error(p + ".name", "duplicate tool name '" + entry_name(*entry) + "'");
            ok = false;
            continue;
        }
        catalog.entries.push_back(std::move(*entry));
    }
    result.diagnostics = std::move(reader.diags);
    if (ok) result.catalog = std::move(catalog);
    return result;
}

inline std::string serialize_catalog(const ToolCatalog& c) {
    detail::ojson doc;
    doc["tools"] = detail::ojson::array();
    for (const auto& e : c.entries) {
        doc["tools"].push_back(std::visit(
            [](const auto& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rubric>)
                    return detail::rubric_to_json(x);
                else
                    return detail::published_to_json(x);
            },
            e));
    }
    return doc.dump(2) + "\n";
}

inline ParseResult load_catalog_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult r;
        r.diagnostics.push_back({Severity::error, "", "cannot open '" + path + "'"});
        return r;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

} // namespace snacap

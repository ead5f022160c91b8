#pragma once

// CSV and JSON renderings of analysis results. Degrees appear rounded to two
// decimals next to an exact column holding the shortest round-trip text.

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "format.hpp"
#include "scientometrics.hpp"

namespace snacap {

enum class ExportFormat { csv, json };

inline std::optional<ExportFormat> parse_export_format(std::string_view s) {
    if (s == "csv") return ExportFormat::csv;
    if (s == "json") return ExportFormat::json;
    return std::nullopt;
}

namespace detail {

using ejson = nlohmann::ordered_json;

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void csv_row(std::ostringstream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << csv_field(cells[i]);
    }
    out << '\n';
}

inline std::string dump(const ejson& j) { return j.dump(2) + "\n"; }

inline ejson scores_json(const DimensionScores& s) {
    ejson j;
    for (Dimension d : kDimensions) j["d_" + std::string(to_string(d))] = get(s, d);
    return j;
}

} // namespace detail

inline std::string export_ranked_list(const RankedList& list, ExportFormat fmt) {
    if (fmt == ExportFormat::csv) {
        std::ostringstream out;
        std::vector<std::string> header{"rank", "tool", "license", "degeneracy", "c4", "c4_exact",
                                        "c4_raw_exact"};
        for (Dimension d : kDimensions) {
            header.push_back("d_" + std::string(to_string(d)));
            header.push_back("d_" + std::string(to_string(d)) + "_exact");
        }
        detail::csv_row(out, header);
        for (std::size_t i = 0; i < list.entries.size(); ++i) {
            const auto& e = list.entries[i];
            const auto& c = e.capability;
            std::vector<std::string> row{std::to_string(i + 1),
                                         e.tool_name,
                                         std::string(to_string(e.license)),
                                         std::string(to_string(c.degeneracy)),
                                         c.normalized ? format_2dp(*c.normalized) : "",
                                         c.normalized ? format_double(*c.normalized) : "",
                                         format_double(c.raw)};
            for (Dimension d : kDimensions) {
                row.push_back(format_2dp(get(e.scores, d)));
                row.push_back(format_double(get(e.scores, d)));
            }
            detail::csv_row(out, row);
        }
        return out.str();
    }
    detail::ejson j;
    j["entries"] = detail::ejson::array();
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
        const auto& e = list.entries[i];
        detail::ejson r;
        r["rank"] = i + 1;
        r["tool"] = e.tool_name;
        r["license"] = to_string(e.license);
        r["degeneracy"] = to_string(e.capability.degeneracy);
        r["c4_raw"] = e.capability.raw;
        r["c4_normalized"] = e.capability.normalized ? detail::ejson(*e.capability.normalized) : nullptr;
        r["c4"] = e.capability.normalized ? format_2dp(*e.capability.normalized) : "";
        r["scores"] = detail::scores_json(e.scores);
        j["entries"].push_back(std::move(r));
    }
    j["unassessed"] = list.unassessed;
    return detail::dump(j);
}

/// Inverse of the JSON form of export_ranked_list.
inline RankedList parse_ranked_list_json(std::string_view text) {
    const auto j = detail::ejson::parse(text.begin(), text.end());
    RankedList list;
    for (const auto& r : j.at("entries")) {
        RankedEntry e;
        e.tool_name = r.at("tool").get<std::string>();
        auto lic = parse_license(r.at("license").get<std::string>());
        auto deg = parse_degeneracy(r.at("degeneracy").get<std::string>());
        if (!lic || !deg) throw std::invalid_argument("ranked list: bad license or degeneracy");
        e.license = *lic;
        e.capability.degeneracy = *deg;
        e.capability.raw = r.at("c4_raw").get<double>();
        if (!r.at("c4_normalized").is_null()) e.capability.normalized = r.at("c4_normalized").get<double>();
        const auto& s = r.at("scores");
        e.scores = {s.at("d_value").get<double>(), s.at("d_volume").get<double>(),
                    s.at("d_variety").get<double>(), s.at("d_visual").get<double>()};
        list.entries.push_back(std::move(e));
    }
    list.unassessed = j.at("unassessed").get<std::vector<std::string>>();
    return list;
}

inline std::string export_distribution(const DistributionStats& stats, ExportFormat fmt) {
    auto fields = [](const Summary& s) {
        return std::vector<std::pair<const char*, double>>{{"min", s.min},       {"q1", s.q1},
                                                           {"median", s.median}, {"q3", s.q3},
                                                           {"max", s.max},       {"mean", s.mean}};
    };
    if (fmt == ExportFormat::csv) {
        std::ostringstream out;
        std::vector<std::string> header{"dimension", "count"};
        for (const auto& [name, _] : fields(Summary{})) {
            header.emplace_back(name);
            header.push_back(std::string(name) + "_exact");
        }
        detail::csv_row(out, header);
        for (const auto& [d, s] : stats.per_dimension) {
            std::vector<std::string> row{"d_" + std::string(to_string(d)), std::to_string(s.count)};
            for (const auto& [_, x] : fields(s)) {
                row.push_back(format_2dp(x));
                row.push_back(format_double(x));
            }
            detail::csv_row(out, row);
        }
        return out.str();
    }
    detail::ejson j = detail::ejson::object();
    for (const auto& [d, s] : stats.per_dimension) {
        detail::ejson r;
        r["count"] = s.count;
        for (const auto& [name, x] : fields(s)) r[name] = x;
        j["d_" + std::string(to_string(d))] = std::move(r);
    }
    return detail::dump(j);
}

inline std::string export_pareto(const ParetoResult& p, ExportFormat fmt) {
    if (p.front.empty()) throw std::logic_error("Pareto result with an empty front");
    const std::string ax = "d_" + std::string(to_string(p.axis_x));
    const std::string ay = "d_" + std::string(to_string(p.axis_y));
    if (fmt == ExportFormat::csv) {
        std::ostringstream out;
        detail::csv_row(out, {"tool", "status", ax, ax + "_exact", ay, ay + "_exact"});
        auto emit = [&](const std::vector<ParetoPoint>& pts, const char* status) {
            for (const auto& q : pts)
                detail::csv_row(out, {q.tool_name, status, format_2dp(q.x), format_double(q.x),
                                      format_2dp(q.y), format_double(q.y)});
        };
        emit(p.front, "front");
        emit(p.dominated, "dominated");
        return out.str();
    }
    auto points = [&](const std::vector<ParetoPoint>& pts) {
        detail::ejson a = detail::ejson::array();
        for (const auto& q : pts) a.push_back({{"tool", q.tool_name}, {ax, q.x}, {ay, q.y}});
        return a;
    };
    detail::ejson j;
    j["axis_x"] = ax;
    j["axis_y"] = ay;
    j["front"] = points(p.front);
    j["dominated"] = points(p.dominated);
    return detail::dump(j);
}

inline std::string export_spectrogram(const Spectrogram& s, ExportFormat fmt) {
    if (fmt == ExportFormat::csv) {
        std::ostringstream out;
        detail::csv_row(out, {"year", "count", "deviation"});
        for (std::size_t i = 0; i < s.counts.size(); ++i)
            detail::csv_row(out, {std::to_string(s.year_at(i)), std::to_string(s.counts[i]),
                                  format_double(s.deviations[i])});
        return out.str();
    }
    detail::ejson j;
    j["first_year"] = s.first_year;
    j["counts"] = s.counts;
    j["deviations"] = s.deviations;
    return detail::dump(j);
}

/// Long format: one line per (citing year, referenced year) cell.
inline std::string export_multi_rpys(const MultiRpysGrid& g, ExportFormat fmt) {
    if (fmt == ExportFormat::csv) {
        std::ostringstream out;
        detail::csv_row(out, {"citing_year", "referenced_year", "deviation", "rank", "empty_row"});
        for (const auto& row : g.rows)
            for (std::size_t i = 0; i < row.deviations.size(); ++i)
                detail::csv_row(out, {std::to_string(row.citing_year),
                                      std::to_string(g.referenced.first + static_cast<int>(i)),
                                      format_double(row.deviations[i]), format_double(row.ranks[i]),
                                      row.empty ? "1" : "0"});
        return out.str();
    }
    detail::ejson j;
    j["referenced_first"] = g.referenced.first;
    j["referenced_last"] = g.referenced.last;
    j["rows"] = detail::ejson::array();
    for (const auto& row : g.rows)
        j["rows"].push_back({{"citing_year", row.citing_year},
                             {"empty", row.empty},
                             {"deviations", row.deviations},
                             {"ranks", row.ranks}});
    return detail::dump(j);
}

} // namespace snacap

#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and returns the exit status: 0 success, 1 invalid input, 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "export.hpp"
#include "netprobe/centrality.hpp"
#include "netprobe/community.hpp"
#include "netprobe/diffusion.hpp"
#include "netprobe/edgelist.hpp"
#include "netprobe/generators.hpp"
#include "netprobe/metrics.hpp"
#include "radar.hpp"
#include "rubric_io.hpp"
#include "scientometrics.hpp"

#ifndef SNACAP_BUNDLED_CATALOG
#define SNACAP_BUNDLED_CATALOG "data/published_tools.json"
#endif

namespace snacap {

namespace detail {

/// Input problem reported with exit status 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliState {
    std::string catalog = SNACAP_BUNDLED_CATALOG;
    std::string format = "csv";
    std::string out_path;
    std::string license = "all";
};

inline ToolCatalog load_catalog_or_throw(const std::string& path, std::ostream& err) {
    auto res = load_catalog_file(path);
    for (const auto& d : res.diagnostics) err << format_diagnostic(d) << '\n';
    if (!res.ok()) throw InputError("catalog '" + path + "' failed validation");
    return std::move(*res.catalog);
}

inline std::vector<ToolScores> scored_tools(const std::string& path, std::ostream& err) {
    auto sc = score_catalog(load_catalog_or_throw(path, err));
    for (const auto& [name, why] : sc.rejected) err << "warning: " << name << ": " << why << '\n';
    return std::move(sc.tools);
}

inline std::optional<License> license_filter(const std::string& s) {
    if (s == "all") return std::nullopt;
    auto l = parse_license(s);
    if (!l) throw InputError("unknown license '" + s + "'");
    return l;
}

inline ExportFormat export_format(const std::string& s) {
    auto f = parse_export_format(s);
    if (!f) throw InputError("unknown format '" + s + "' (csv or json)");
    return *f;
}

inline Dimension dimension_arg(const std::string& s) {
    auto d = parse_dimension(s);
    if (!d) throw InputError("unknown dimension '" + s + "'");
    return *d;
}

inline net::Graph load_graph(const std::string& path, bool directed = false) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open edge list '" + path + "'");
    return net::read_edge_list(in, 0, directed);
}

inline std::vector<CitationRecord> load_citations(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open citation file '" + path + "'");
    return read_citation_csv(in);
}

inline std::string score_table(const std::vector<ToolScores>& tools, ExportFormat fmt) {
    if (fmt == ExportFormat::json) {
        ejson j = ejson::array();
        for (const auto& t : tools) {
            ejson r;
            r["tool"] = t.name;
            r["license"] = to_string(t.license);
            for (Dimension d : kDimensions) {
                const auto& x = t.scores.get(d);
                r["d_" + std::string(to_string(d))] = x ? ejson(*x) : ejson(nullptr);
            }
            if (auto full = t.scores.complete()) {
                const auto c = capability_c4(*full);
                r["c4_raw"] = c.raw;
                r["c4_normalized"] = c.normalized ? ejson(*c.normalized) : ejson(nullptr);
                r["degeneracy"] = to_string(c.degeneracy);
            }
            j.push_back(std::move(r));
        }
        return dump(j);
    }
    std::ostringstream out;
    std::vector<std::string> header{"tool", "license"};
    for (Dimension d : kDimensions) {
        header.push_back("d_" + std::string(to_string(d)));
        header.push_back("d_" + std::string(to_string(d)) + "_exact");
    }
    for (const char* h : {"c4", "c4_exact", "c4_raw_exact", "degeneracy"}) header.emplace_back(h);
    csv_row(out, header);
    for (const auto& t : tools) {
        std::vector<std::string> row{t.name, std::string(to_string(t.license))};
        for (Dimension d : kDimensions) {
            const auto& x = t.scores.get(d);
            row.push_back(x ? format_2dp(*x) : "");
            row.push_back(x ? format_double(*x) : "");
        }
        if (auto full = t.scores.complete()) {
            const auto c = capability_c4(*full);
            row.push_back(c.normalized ? format_2dp(*c.normalized) : "");
            row.push_back(c.normalized ? format_double(*c.normalized) : "");
            row.push_back(format_double(c.raw));
            row.emplace_back(to_string(c.degeneracy));
        } else {
            row.insert(row.end(), {"", "", "", ""});
        }
        csv_row(out, row);
    }
    return out.str();
}

inline std::vector<std::pair<std::string, std::string>> metrics_rows(const net::MetricsReport& m) {
    std::string hist;
    for (std::size_t k = 0; k < m.degree_histogram.size(); ++k) {
        if (m.degree_histogram[k] == 0) continue;
        if (!hist.empty()) hist += ' ';
        hist += std::to_string(k) + ":" + std::to_string(m.degree_histogram[k]);
    }
    return {{"mean_degree", format_double(m.mean_degree)},
            {"density", format_double(m.density)},
            {"global_clustering", format_double(m.global_clustering)},
            {"triangles", std::to_string(m.triangles)},
            {"components", std::to_string(m.components)},
            {"largest_component_size", std::to_string(m.largest_component_size)},
            {"disconnected", m.disconnected ? "true" : "false"},
            {"average_path_length", format_double(m.average_path_length)},
            {"diameter", std::to_string(m.diameter)},
            {"degree_distribution", hist}};
}

inline std::string trajectory_csv(const net::Trajectory& t) {
    std::ostringstream out;
    const bool cascade = net::is_cascade_model(t.model);
    using net::NodeState;
    if (cascade)
        csv_row(out, {"step", "inactive", "active", "active_nodes"});
    else
        csv_row(out, {"step", "S", "I", "R", "infected_nodes"});
    const NodeState marked = cascade ? NodeState::active : NodeState::infected;
    for (std::size_t s = 0; s < t.states.size(); ++s) {
        std::string nodes;
        for (std::size_t v = 0; v < t.states[s].size(); ++v) {
            if (t.states[s][v] != marked) continue;
            if (!nodes.empty()) nodes += ' ';
            nodes += std::to_string(v);
        }
        if (cascade)
            csv_row(out, {std::to_string(s), std::to_string(t.count(s, NodeState::inactive)),
                          std::to_string(t.count(s, NodeState::active)), nodes});
        else
            csv_row(out, {std::to_string(s), std::to_string(t.count(s, NodeState::susceptible)),
                          std::to_string(t.count(s, NodeState::infected)),
                          std::to_string(t.count(s, NodeState::removed)), nodes});
    }
    return out.str();
}

inline std::string trajectory_json(const net::Trajectory& t) {
    ejson j;
    j["model"] = [&] {
        switch (t.model) {
        case net::DiffusionModel::sis: return "sis";
        case net::DiffusionModel::sir: return "sir";
        case net::DiffusionModel::sirs: return "sirs";
        case net::DiffusionModel::icm: return "icm";
        case net::DiffusionModel::ltm: return "ltm";
        }
        return "?";
    }();
    j["rng_seed"] = t.rng_seed;
    j["absorbed"] = t.absorbed;
    j["steps"] = ejson::array();
    for (const auto& st : t.states) {
        ejson row = ejson::array();
        for (auto s : st) row.push_back(net::to_string(s));
        j["steps"].push_back(std::move(row));
    }
    return dump(j);
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"Capability scoring, ranking and network analysis toolkit", "snacap"};
    app.require_subcommand(1);
    CliState st;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", st.format, "csv or json")->capture_default_str();
        sub->add_option("-o,--out", st.out_path, "Write to a file instead of stdout");
    };
    auto add_catalog = [&](CLI::App* sub) {
        sub->add_option("--catalog", st.catalog, "Tool catalog JSON")->capture_default_str();
    };

    std::function<std::string()> action;

    // score
    bool score_rank = false;
    auto* score = app.add_subcommand("score", "Dimension degrees and C4 for every catalog tool");
    add_catalog(score);
    add_output(score);
    score->add_flag("--rank", score_rank, "Emit the ranking instead of catalog order");
    score->add_option("--license", st.license, "open_source, proprietary or all");
    score->callback([&] {
        action = [&] {
            auto tools = scored_tools(st.catalog, err);
            if (score_rank) return export_ranked_list(rank(tools, license_filter(st.license)), export_format(st.format));
            auto filter = license_filter(st.license);
            std::vector<ToolScores> kept;
            for (auto& t : tools)
                if (!filter || t.license == *filter) kept.push_back(t);
            return score_table(kept, export_format(st.format));
        };
    });

    // rank
    std::size_t rank_limit = 0;
    auto* rank_cmd = app.add_subcommand("rank", "Order tools by normalized C4");
    add_catalog(rank_cmd);
    add_output(rank_cmd);
    rank_cmd->add_option("--license", st.license, "open_source, proprietary or all")->capture_default_str();
    rank_cmd->add_option("--limit", rank_limit, "Keep only the first N rows (0 keeps all)");
    rank_cmd->callback([&] {
        action = [&] {
            auto list = rank(scored_tools(st.catalog, err), license_filter(st.license));
            if (rank_limit && list.entries.size() > rank_limit) list.entries.resize(rank_limit);
            return export_ranked_list(list, export_format(st.format));
        };
    });

    // top
    std::string top_dim;
    std::size_t top_k = 5;
    auto* top = app.add_subcommand("top", "Leaderboard for one dimension");
    add_catalog(top);
    add_output(top);
    top->add_option("--dimension", top_dim, "value, volume, variety or visual")->required();
    top->add_option("-k", top_k, "Number of tools")->capture_default_str();
    top->callback([&] {
        action = [&] {
            const Dimension d = dimension_arg(top_dim);
            auto rows = top_k_by_dimension(scored_tools(st.catalog, err), d, top_k);
            const std::string col = "d_" + std::string(to_string(d));
            if (export_format(st.format) == ExportFormat::json) {
                ejson j = ejson::array();
                for (std::size_t i = 0; i < rows.size(); ++i)
                    j.push_back({{"rank", i + 1}, {"tool", rows[i].tool_name}, {col, rows[i].score},
                                 {"score", format_2dp(rows[i].score)}});
                return dump(j);
            }
            std::ostringstream o;
            csv_row(o, {"rank", "tool", col, col + "_exact"});
            for (std::size_t i = 0; i < rows.size(); ++i)
                csv_row(o, {std::to_string(i + 1), rows[i].tool_name, format_2dp(rows[i].score),
                            format_double(rows[i].score)});
            return o.str();
        };
    });

    // pareto
    std::string px = "value", py = "volume";
    auto* pareto = app.add_subcommand("pareto", "Non-dominated tools on two dimensions");
    add_catalog(pareto);
    add_output(pareto);
    pareto->add_option("--x", px, "First dimension")->capture_default_str();
    pareto->add_option("--y", py, "Second dimension")->capture_default_str();
    pareto->callback([&] {
        action = [&] {
            auto r = pareto_front(scored_tools(st.catalog, err), dimension_arg(px), dimension_arg(py));
            if (r.front.empty()) throw InputError("no tool has both dimensions scored");
            return export_pareto(r, export_format(st.format));
        };
    });

    // dist
    auto* dist = app.add_subcommand("dist", "Quartile summary per dimension");
    add_catalog(dist);
    add_output(dist);
    dist->add_option("--license", st.license, "open_source, proprietary or all")->capture_default_str();
    dist->callback([&] {
        action = [&] {
            auto filter = license_filter(st.license);
            std::vector<ToolScores> kept;
            for (auto& t : scored_tools(st.catalog, err))
                if (!filter || t.license == *filter) kept.push_back(t);
            return export_distribution(distribution_stats(kept), export_format(st.format));
        };
    });

    // radar
    std::string radar_tool;
    std::vector<double> radar_scores;
    double radar_size = 400.0;
    auto* radar = app.add_subcommand("radar", "SVG spider chart for one tool or score tuple");
    add_catalog(radar);
    radar->add_option("-o,--out", st.out_path, "SVG output path");
    auto* tool_opt = radar->add_option("--tool", radar_tool, "Tool name from the catalog");
    radar->add_option("--scores", radar_scores, "d_value d_volume d_variety d_visual")
        ->expected(4)
        ->excludes(tool_opt);
    radar->add_option("--size", radar_size, "Canvas size in pixels")->capture_default_str();
    radar->callback([&] {
        action = [&] {
            RadarSpec spec;
            spec.size = radar_size;
            if (!radar_scores.empty()) {
                spec.scores = {radar_scores[0], radar_scores[1], radar_scores[2], radar_scores[3]};
            } else if (!radar_tool.empty()) {
                const auto tools = scored_tools(st.catalog, err);
                auto it = std::find_if(tools.begin(), tools.end(),
                                       [&](const ToolScores& t) { return t.name == radar_tool; });
                if (it == tools.end()) throw InputError("no tool named '" + radar_tool + "'");
                auto full = it->scores.complete();
                if (!full) throw InputError("tool '" + radar_tool + "' lacks one or more degrees");
                spec.scores = *full;
                spec.title = radar_tool;
            } else {
                throw CLI::RequiredError("--tool or --scores");
            }
            return render_radar(spec);
        };
    });

    // rpys
    std::string citations;
    std::optional<int> ref_from, ref_to;
    auto* rp = app.add_subcommand("rpys", "Reference publication year spectrogram");
    add_output(rp);
    rp->add_option("--citations", citations, "CSV of citing_year,cited_year pairs")->required();
    rp->add_option("--from", ref_from, "First referenced year");
    rp->add_option("--to", ref_to, "Last referenced year");
    rp->callback([&] {
        action = [&] {
            std::optional<YearRange> range;
            if (ref_from || ref_to) {
                if (!(ref_from && ref_to)) throw InputError("--from and --to go together");
                range = YearRange{*ref_from, *ref_to};
            }
            return export_spectrogram(rpys(load_citations(citations), range), export_format(st.format));
        };
    });

    // multirpys
    int citing_from = 0, citing_to = 0, mref_from = 0, mref_to = 0;
    auto* mrp = app.add_subcommand("multirpys", "Per-citing-year spectrograms with row ranks");
    add_output(mrp);
    mrp->add_option("--citations", citations, "CSV of citing_year,cited_year pairs")->required();
    mrp->add_option("--citing-from", citing_from)->required();
    mrp->add_option("--citing-to", citing_to)->required();
    mrp->add_option("--ref-from", mref_from)->required();
    mrp->add_option("--ref-to", mref_to)->required();
    mrp->callback([&] {
        action = [&] {
            auto grid = multi_rpys(load_citations(citations), {citing_from, citing_to}, {mref_from, mref_to});
            return export_multi_rpys(grid, export_format(st.format));
        };
    });

    // validate
    auto* validate = app.add_subcommand("validate", "Check a catalog and list diagnostics");
    add_catalog(validate);
    validate->callback([&] {
        action = [&] {
            auto cat = load_catalog_or_throw(st.catalog, err);
            return "ok: " + std::to_string(cat.entries.size()) + " tools\n";
        };
    });

    // graph
    auto* graph = app.add_subcommand("graph", "Graph generation, metrics, centrality, communities, diffusion");
    graph->require_subcommand(1);
    graph->require_subcommand(1);
    std::string edges_path;
    std::uint64_t seed = 0;

    std::string gen_model;
    net::GeneratorParams gp;
    auto* gen = graph->add_subcommand("gen", "Generate a random graph as an edge list");
    gen->add_option("-o,--out", st.out_path, "Edge-list output path");
    gen->add_option("--model", gen_model, "er_gnm, gilbert_gnp, watts_strogatz or barabasi_albert")->required();
    gen->add_option("--n", gp.n, "Node count")->required();
    gen->add_option("--m", gp.m, "Edges (er_gnm) or links per new node (barabasi_albert)");
    gen->add_option("--p", gp.p, "Edge probability (gilbert_gnp) or rewiring (watts_strogatz)");
    gen->add_option("--k", gp.k, "Lattice degree (watts_strogatz)");
    auto* m0_opt = gen->add_option("--m0", gp.m0, "Seed clique size (barabasi_albert, default: m)");
    gen->add_option("--seed,--rng", seed, "RNG seed")->capture_default_str();
    gen->callback([&] {
        action = [&] {
            auto model = net::parse_graph_model(gen_model);
            if (!model) throw InputError("unknown graph model '" + gen_model + "'");
            if (m0_opt->count() == 0) gp.m0 = gp.m;
            std::ostringstream o;
            net::write_edge_list(o, net::generate(*model, gp, seed));
            return o.str();
        };
    });

    bool want_kcore = false, want_balance = false;
    std::optional<double> quasi_gamma;
    auto* met = graph->add_subcommand("metrics", "Structural summary of an edge list");
    add_output(met);
    met->add_option("--edges", edges_path, "Edge-list file")->required();
    met->add_flag("--kcore", want_kcore, "Append core numbers");
    met->add_flag("--balance", want_balance, "Append signed-triangle balance");
    met->add_option("--quasi-clique", quasi_gamma, "Append a greedy gamma-dense node set");
    met->callback([&] {
        action = [&] {
            const auto g = load_graph(edges_path);
            auto rows = metrics_rows(net::basic_metrics(g));
            if (want_kcore) {
                std::string cores;
                for (auto c : net::k_core(g)) cores += (cores.empty() ? "" : " ") + std::to_string(c);
                rows.emplace_back("core_numbers", cores);
            }
            if (want_balance) {
                const auto b = net::triad_balance(g);
                rows.emplace_back("balanced_triangles", std::to_string(b.balanced_triangles));
                rows.emplace_back("unbalanced_triangles", std::to_string(b.unbalanced_triangles));
                rows.emplace_back("is_balanced", b.is_balanced ? "true" : "false");
            }
            if (quasi_gamma) {
                std::string nodes;
                for (auto v : net::greedy_quasi_clique(g, *quasi_gamma))
                    nodes += (nodes.empty() ? "" : " ") + std::to_string(v);
                rows.emplace_back("quasi_clique", nodes);
            }
            if (export_format(st.format) == ExportFormat::json) {
                ejson j = ejson::object();
                for (const auto& [k, v] : rows) j[k] = v;
                return dump(j);
            }
            std::ostringstream o;
            csv_row(o, {"metric", "value"});
            for (const auto& [k, v] : rows) csv_row(o, {k, v});
            return o.str();
        };
    });

    std::string measure = "degree";
    net::CentralityParams cp;
    bool directed = false;
    auto* cen = graph->add_subcommand("centrality", "Per-node centrality scores");
    add_output(cen);
    cen->add_option("--edges", edges_path, "Edge-list file")->required();
    cen->add_option("--measure", measure, "degree, closeness, betweenness, eigenvector or pagerank")
        ->capture_default_str();
    cen->add_option("--damping", cp.damping, "PageRank damping")->capture_default_str();
    cen->add_flag("--directed", directed, "Read the edge list as directed (pagerank, degree)");
    cen->callback([&] {
        action = [&] {
            auto m = net::parse_centrality_measure(measure);
            if (!m) throw InputError("unknown centrality measure '" + measure + "'");
            if (!(cp.damping > 0.0)) throw InputError("damping must be positive");
            const auto r = net::centrality(load_graph(edges_path, directed), *m, cp);
            if (r.per_component) err << "note: graph is disconnected; scores are per component\n";
            if (export_format(st.format) == ExportFormat::json) {
                ejson j;
                j["measure"] = measure;
                j["per_component"] = r.per_component;
                j["scores"] = r.scores;
                return dump(j);
            }
            std::ostringstream o;
            csv_row(o, {"node", measure});
            for (std::size_t v = 0; v < r.scores.size(); ++v)
                csv_row(o, {std::to_string(v), format_double(r.scores[v])});
            return o.str();
        };
    });

    std::string method = "greedy";
    std::optional<std::size_t> target;
    auto* com = graph->add_subcommand("community", "Partition nodes into communities");
    add_output(com);
    com->add_option("--edges", edges_path, "Edge-list file")->required();
    com->add_option("--method", method, "greedy or girvan_newman")->capture_default_str();
    com->add_option("--target", target, "girvan_newman: component count to stop at (default: best modularity)");
    com->callback([&] {
        action = [&] {
            const auto g = load_graph(edges_path);
            net::Partition p;
            if (method == "greedy") {
                p = net::greedy_modularity(g);
            } else if (method == "girvan_newman") {
                p = target ? net::girvan_newman(g, *target).partition : net::girvan_newman_best(g).partition;
            } else {
                throw InputError("unknown community method '" + method + "'");
            }
            const bool has_q = g.edge_count() > 0;
            const double q = has_q ? net::modularity(g, p) : 0.0;
            if (export_format(st.format) == ExportFormat::json) {
                ejson j;
                j["method"] = method;
                j["modularity"] = has_q ? ejson(q) : ejson(nullptr);
                j["partition"] = p;
                return dump(j);
            }
            std::ostringstream o;
            if (has_q) o << "# modularity " << format_double(q) << '\n';
            csv_row(o, {"node", "community"});
            for (std::size_t v = 0; v < p.size(); ++v) csv_row(o, {std::to_string(v), std::to_string(p[v])});
            return o.str();
        };
    });

    std::string diff_model;
    net::DiffusionParams dp;
    std::vector<std::size_t> seeds;
    auto* dif = graph->add_subcommand("diffuse", "Simulate a spreading process");
    add_output(dif);
    dif->add_option("--edges", edges_path, "Edge-list file")->required();
    dif->add_option("--model", diff_model, "sis, sir, sirs, icm or ltm")->required();
    dif->add_option("--seeds", seeds, "Initially infected or active nodes")->required()->delimiter(',');
    dif->add_option("--beta", dp.beta, "Infection probability per contact");
    dif->add_option("--mu", dp.mu, "Cure probability");
    dif->add_option("--xi", dp.xi, "SIRS: return to susceptible probability");
    dif->add_option("--p", dp.p, "ICM activation probability");
    dif->add_flag("--p-from-weights", dp.p_from_weights, "ICM: use edge weights as probabilities");
    dif->add_option("--phi", dp.phi, "LTM threshold for every node");
    dif->add_option("--steps", dp.steps, "Maximum number of steps")->capture_default_str();
    dif->add_option("--rng,--seed", seed, "RNG seed")->capture_default_str();
    dif->callback([&] {
        action = [&] {
            auto model = net::parse_diffusion_model(diff_model);
            if (!model) throw InputError("unknown diffusion model '" + diff_model + "'");
            const auto t = net::diffuse(load_graph(edges_path), *model, dp, seeds, seed);
            return export_format(st.format) == ExportFormat::json ? trajectory_json(t) : trajectory_csv(t);
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::string text = action();
        if (st.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(st.out_path, std::ios::binary);
            if (!f) throw InputError("cannot write '" + st.out_path + "'");
            f << text;
        }
        return 0;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace snacap

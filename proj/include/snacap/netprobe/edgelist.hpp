#pragma once

// Edge-list text format: one `u v [weight] [sign]` per line, `#` starts a
// comment. The node count is one more than the largest id unless a larger
// count is requested or declared by a `# nodes N` comment.

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "../format.hpp"
#include "graph.hpp"

namespace snacap::net {

inline Graph read_edge_list(std::istream& in, std::size_t min_nodes = 0, bool directed = false) {
    std::vector<Edge> edges;
    std::size_t n = min_nodes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            // "# nodes N" declares trailing isolated nodes.
            std::istringstream comment(line.substr(hash + 1));
            std::string word;
            std::size_t declared = 0;
            if (comment >> word && word == "nodes" && comment >> declared) n = std::max(n, declared);
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + why);
        };
        if (tok.size() < 2 || tok.size() > 4) fail("expected 'u v [weight] [sign]'");
        Edge e;
        auto node = [&](const std::string& s) {
            Node x = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
            if (ec != std::errc{} || p != s.data() + s.size()) fail("bad node id '" + s + "'");
            return x;
        };
        e.u = node(tok[0]);
        e.v = node(tok[1]);
        if (tok.size() >= 3) {
            try {
                std::size_t used = 0;
                e.weight = std::stod(tok[2], &used);
                if (used != tok[2].size()) fail("bad weight '" + tok[2] + "'");
            } catch (const std::logic_error&) {
                fail("bad weight '" + tok[2] + "'");
            }
        }
        if (tok.size() == 4) {
            const auto& s = tok[3];
            if (s == "+" || s == "+1" || s == "1")
                e.sign = 1;
            else if (s == "-" || s == "-1")
                e.sign = -1;
            else
                fail("bad sign '" + s + "'");
        }
        n = std::max({n, e.u + 1, e.v + 1});
        edges.push_back(e);
    }
    return Graph(n, std::move(edges), directed);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << "\n";
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (e.weight != 1.0 || e.sign) out << ' ' << format_double(e.weight);
        if (e.sign) out << ' ' << (*e.sign > 0 ? "+1" : "-1");
        out << '\n';
    }
}

} // namespace snacap::net

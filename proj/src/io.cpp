#include "liec/io.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "liec/errors.hpp"

namespace liec {

int ParsedGraph::vertex_of(long long label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

namespace {

bool parse_nonneg(const std::string &tok, long long &out) {
    if (tok.empty()) return false;
    long long v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return false;
        v = v * 10 + (ch - '0');
        if (v > (1LL << 62)) return false;
    }
    out = v;
    return true;
}

std::vector<std::string> tokens_of(const std::string &line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

bool skippable(const std::string &line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true; // blank
}

} // namespace

ParsedGraph parse_edge_list(std::istream &in) {
    std::vector<long long> labels;
    std::map<long long, int> id_of;
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> seen;

    auto intern = [&](long long lbl) {
        auto it = id_of.find(lbl);
        if (it != id_of.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(lbl);
        id_of.emplace(lbl, id);
        return id;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto toks = tokens_of(line);
        if (toks.size() != 2) throw ParseError(lineno, "expected two labels");
        long long a, b;
        if (!parse_nonneg(toks[0], a) || !parse_nonneg(toks[1], b))
            throw ParseError(lineno, "labels must be non-negative integers");
        if (a == b) throw ParseError(lineno, "self-loop");
        int u = intern(a), v = intern(b);
        auto key = std::minmax(u, v);
        if (!seen.emplace(std::pair<int, int>{key.first, key.second}, lineno).second)
            throw ParseError(lineno, "duplicate edge");
        edges.push_back({u, v});
    }
    return ParsedGraph{Graph(static_cast<int>(labels.size()), edges), labels};
}

ParsedGraph parse_edge_list(const std::string &text) {
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

void serialize_edge_list(const Graph &g, std::ostream &out) {
    for (int e = 0; e < g.m(); ++e) out << g.edge(e).first << ' ' << g.edge(e).second << '\n';
}

void serialize_edge_list(const ParsedGraph &pg, std::ostream &out) {
    for (int e = 0; e < pg.graph.m(); ++e) {
        auto [u, v] = pg.graph.edge(e);
        out << pg.labels[u] << ' ' << pg.labels[v] << '\n';
    }
}

EdgeColoring parse_coloring(const ParsedGraph &pg, std::istream &in) {
    const Graph &g = pg.graph;
    std::map<long long, int> id_of;
    for (size_t i = 0; i < pg.labels.size(); ++i) id_of[pg.labels[i]] = static_cast<int>(i);
    auto lookup = [&](long long lbl) {
        auto it = id_of.find(lbl);
        return it == id_of.end() ? -1 : it->second;
    };
    std::vector<int> colors(g.m(), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        auto toks = tokens_of(line);
        if (toks.size() != 3) throw ParseError(lineno, "expected \"u v c\"");
        long long a, b, c;
        if (!parse_nonneg(toks[0], a) || !parse_nonneg(toks[1], b) || !parse_nonneg(toks[2], c))
            throw ParseError(lineno, "fields must be non-negative integers");
        int u = lookup(a), v = lookup(b);
        if (u < 0 || v < 0) throw ParseError(lineno, "unknown vertex label");
        int e = g.edge_id(u, v);
        if (e < 0) throw ParseError(lineno, "edge not in graph");
        if (colors[e] != 0) throw ParseError(lineno, "edge colored twice");
        if (c < 1) throw ParseError(lineno, "colors are 1-based");
        colors[e] = static_cast<int>(c);
    }
    for (int e = 0; e < g.m(); ++e)
        if (colors[e] == 0) throw ParseError(lineno, "coloring does not cover every edge");
    return EdgeColoring(g, std::move(colors));
}

void serialize_coloring(const ParsedGraph &pg, const EdgeColoring &col, std::ostream &out) {
    for (int e = 0; e < pg.graph.m(); ++e) {
        auto [u, v] = pg.graph.edge(e);
        out << pg.labels[u] << ' ' << pg.labels[v] << ' ' << col.color(e) << '\n';
    }
}

void export_dot(const ParsedGraph &pg, const EdgeColoring *col, std::ostream &out) {
    static const char *palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#999999"};
    out << "graph G {\n";
    for (size_t v = 0; v < pg.labels.size(); ++v) out << "  " << pg.labels[v] << ";\n";
    for (int e = 0; e < pg.graph.m(); ++e) {
        auto [u, v] = pg.graph.edge(e);
        out << "  " << pg.labels[u] << " -- " << pg.labels[v];
        if (col) {
            int c = col->color(e);
            out << " [label=\"" << c << "\", color=\"" << palette[(c - 1) % 8] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
}

} // namespace liec

#ifndef LIEC_IO_HPP
#define LIEC_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "liec/coloring.hpp"
#include "liec/graph.hpp"

namespace liec {

// Graph read from an edge list, with the original labels kept in
// first-appearance order (labels[i] is the raw label of dense vertex i).
struct ParsedGraph {
    Graph graph;
    std::vector<long long> labels;

    int vertex_of(long long label) const; // -1 when unknown
};

// Edge-list format: one edge per line as two whitespace-separated non-negative
// integer labels; lines starting with '#' and blank lines are ignored.
// Throws ParseError (with line number) on malformed lines, self-loops and
// duplicate edges.
ParsedGraph parse_edge_list(std::istream &in);
ParsedGraph parse_edge_list(const std::string &text);

void serialize_edge_list(const Graph &g, std::ostream &out);
void serialize_edge_list(const ParsedGraph &pg, std::ostream &out);

// Coloring file format: one line per edge "u v c" with c >= 1; the lines must
// cover the graph's edge set exactly.
EdgeColoring parse_coloring(const ParsedGraph &pg, std::istream &in);
void serialize_coloring(const ParsedGraph &pg, const EdgeColoring &col, std::ostream &out);

// Graphviz output; when a coloring is given, edges carry color attributes.
void export_dot(const ParsedGraph &pg, const EdgeColoring *col, std::ostream &out);

} // namespace liec

#endif

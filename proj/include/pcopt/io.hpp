#pragma once

#include "pcopt/coloring.hpp"
#include "pcopt/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace pcopt {

// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
Graph read_edge_list(std::istream &in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream &out, const Graph &g);
std::string format_edge_list(const Graph &g);

// graph6: one line of printable ASCII. An optional ">>graph6<<" header is
// accepted on input.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph &g);

enum class GraphFormat { edge_list, graph6, automatic };

GraphFormat parse_graph_format(std::string_view name);
// automatic: edge-list when the first token is an integer, graph6 otherwise.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);
Graph load_graph(const std::string &path, GraphFormat format = GraphFormat::automatic);

// Coloring file: lines "u v c" with c >= 0; edges not listed keep color 0.
EdgeColoring parse_coloring(const Graph &g, std::string_view text);
EdgeColoring load_coloring(const Graph &g, const std::string &path);
// Writes every edge, including those at color 0.
std::string format_coloring(const Graph &g, const EdgeColoring &c);

std::string read_file(const std::string &path);

} // namespace pcopt

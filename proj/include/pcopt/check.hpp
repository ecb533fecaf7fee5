#pragma once

#include "pcopt/coloring.hpp"
#include "pcopt/graph.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace pcopt {

using Path = std::vector<Vertex>;
using VertexPair = std::pair<Vertex, Vertex>;

// Simple u-v path whose consecutive edges have distinct colors. Depth-first
// over simple paths in neighbor order; a branch is abandoned as soon as v is
// not reachable from it by a properly colored walk avoiding the path so far.
std::optional<Path> exists_pc_path(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v);

// Vertices at the end of some non-empty properly colored walk from u (BFS
// over arcs). Every properly colored path is such a walk, so this is a
// superset of path reachability but never a substitute for it.
std::vector<Vertex> pc_walk_reachable(const Graph &g, const EdgeColoring &c, Vertex u);

struct ConnectivityReport {
  bool properly_connected = false;
  std::optional<VertexPair> violating_pair;
  std::size_t checked_pairs = 0;
  std::optional<std::map<VertexPair, Path>> witness_paths;
};

// Checks every unordered pair in lexicographic order and stops at the first
// failure. Disconnected input fails at its least cross-component pair.
ConnectivityReport is_properly_connected(const Graph &g, const EdgeColoring &c,
                                         bool collect_paths = false);

struct ProperColoringReport {
  bool properly_colored = true;
  std::optional<std::pair<Edge, Edge>> violating_edges;
};

ProperColoringReport is_properly_colored(const Graph &g, const EdgeColoring &c);

bool is_properly_colored_path(const Graph &g, const EdgeColoring &c, const Path &path);

} // namespace pcopt

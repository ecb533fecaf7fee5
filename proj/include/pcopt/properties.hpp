#pragma once

#include "pcopt/graph.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace pcopt {

struct GraphStats {
  int max_degree = 0;
  std::optional<int> diameter; // nullopt when disconnected
  bool is_connected = false;
  bool is_complete = false;
  int vertex_connectivity = 0;
  int component_count = 0;
};

GraphStats compute_stats(const Graph &g);

bool is_connected(const Graph &g);
bool is_complete(const Graph &g);
// Connected and acyclic.
bool is_tree(const Graph &g);
int max_degree(const Graph &g);

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph &g, Vertex source);
std::optional<int> diameter(const Graph &g);

// Components of g with the flagged vertices removed, each sorted, listed in
// order of least vertex.
std::vector<std::vector<Vertex>> components(const Graph &g, const std::vector<bool> &removed = {});

// True iff no three vertices are pairwise non-adjacent.
bool alpha_at_most_2(const Graph &g);

// Ordered (p1,p2,p3,p4) with p1p2, p2p3, p3p4 edges and p1p3, p1p4, p2p4 non-edges.
struct InducedPathWitness {
  std::array<Vertex, 4> vertices{};
};

// Lexicographically least witness over ordered 4-tuples, or nullopt when g is P4-free.
std::optional<InducedPathWitness> find_induced_p4(const Graph &g);

// Least vertex set in (size, lexicographic) order whose removal disconnects g.
// Throws PreconditionError when g is disconnected or complete.
std::vector<Vertex> min_vertex_cut(const Graph &g);

struct CutStructure {
  std::vector<Vertex> cutset;
  std::vector<std::vector<Vertex>> sides;
  bool complete_bipartite_certified = false;
  bool graph_is_complete = false;
};

// For a connected P4-free non-complete graph: a minimum cutset S such that
// every vertex of S is adjacent to every vertex outside S. Complete input
// yields an empty cut with graph_is_complete set.
CutStructure p4free_spanning_bipartition(const Graph &g);

} // namespace pcopt

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pcopt {

using Vertex = int;
using EdgeId = std::size_t;

// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Edges are kept sorted, so an edge's position in edges() is its canonical id.
class Graph {
public:
  Graph() = default;

  // Throws ParseError on self-loops or out-of-range endpoints. Duplicates
  // (in either orientation) collapse to one edge.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge &edge(EdgeId id) const { return edges_[id]; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex a, Vertex b) const { return index_of(a, b) >= 0; }

  std::optional<EdgeId> edge_index(Vertex a, Vertex b) const {
    const long id = index_of(a, b);
    if (id < 0)
      return std::nullopt;
    return static_cast<EdgeId>(id);
  }

  // Unchecked lookup; the pair must be an edge.
  EdgeId edge_id(Vertex a, Vertex b) const { return static_cast<EdgeId>(index_of(a, b)); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  long index_of(Vertex a, Vertex b) const {
    return index_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(b)];
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<long> index_;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);

// Graph obtained by renaming vertex v to perm[v].
Graph relabel(const Graph &g, std::span<const Vertex> perm);

// Same vertex set, edges restricted to the given subset.
Graph spanning_subgraph(const Graph &g, std::span<const EdgeId> keep);

} // namespace pcopt

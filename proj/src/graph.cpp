#include "pcopt/graph.hpp"

#include "pcopt/error.hpp"

#include <algorithm>
#include <string>

namespace pcopt {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0)
    throw ParseError("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge &e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ParseError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v)
      throw ParseError("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  const auto un = static_cast<std::size_t>(n);
  adj_.assign(un, {});
  index_.assign(un * un, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    index_[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)] = static_cast<long>(i);
    index_[static_cast<std::size_t>(v) * un + static_cast<std::size_t>(u)] = static_cast<long>(i);
  }
  for (auto &list : adj_)
    std::sort(list.begin(), list.end());
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto &[u, v] : edge_list)
    edges.push_back(Edge{u, v});
  return Graph(n, edges);
}

Graph relabel(const Graph &g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order()))
    throw PreconditionError("relabel: permutation size does not match vertex count");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge &e : g.edges())
    edges.push_back(make_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
  return Graph(g.order(), edges);
}

Graph spanning_subgraph(const Graph &g, std::span<const EdgeId> keep) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (EdgeId id : keep)
    edges.push_back(g.edge(id));
  return Graph(g.order(), edges);
}

} // namespace pcopt

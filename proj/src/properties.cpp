#include "pcopt/properties.hpp"

#include "pcopt/error.hpp"

#include <algorithm>
#include <queue>

namespace pcopt {

std::vector<int> distances_from(const Graph &g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      auto &d = dist[static_cast<std::size_t>(y)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(x)] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> components(const Graph &g, const std::vector<bool> &removed) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<bool> seen = removed.empty() ? std::vector<bool>(n, false) : removed;
  std::vector<std::vector<Vertex>> result;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    auto &comp = result.emplace_back();
    seen[s] = true;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x))
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
  }
  return result;
}

bool is_connected(const Graph &g) { return components(g).size() <= 1; }

bool is_complete(const Graph &g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_tree(const Graph &g) {
  return g.order() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.order()) &&
         is_connected(g);
}

int max_degree(const Graph &g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::max(best, g.degree(v));
  return best;
}

std::optional<int> diameter(const Graph &g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : distances_from(g, s)) {
      if (d < 0)
        return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

bool disconnects(const Graph &g, std::span<const Vertex> cut, std::vector<bool> &removed) {
  std::fill(removed.begin(), removed.end(), false);
  for (Vertex v : cut)
    removed[static_cast<std::size_t>(v)] = true;
  return components(g, removed).size() >= 2;
}

} // namespace

std::vector<Vertex> min_vertex_cut(const Graph &g) {
  if (!is_connected(g))
    throw PreconditionError("min_vertex_cut: graph is disconnected");
  if (is_complete(g))
    throw PreconditionError("min_vertex_cut: complete graphs have no vertex cut");
  const int n = g.order();
  int min_degree = n;
  for (Vertex v = 0; v < n; ++v)
    min_degree = std::min(min_degree, g.degree(v));

  std::vector<bool> removed(static_cast<std::size_t>(n));
  // A non-complete graph always has a cut of size at most the minimum degree.
  for (int k = 1; k <= min_degree; ++k) {
    std::vector<Vertex> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      combo[static_cast<std::size_t>(i)] = i;
    while (true) {
      if (disconnects(g, combo, removed))
        return combo;
      int i = k - 1;
      while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i)
        --i;
      if (i < 0)
        break;
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw InternalError("min_vertex_cut: no cut found up to the minimum degree");
}

GraphStats compute_stats(const Graph &g) {
  GraphStats stats;
  stats.max_degree = max_degree(g);
  stats.component_count = static_cast<int>(components(g).size());
  stats.is_connected = stats.component_count <= 1;
  stats.is_complete = is_complete(g);
  stats.diameter = diameter(g);
  if (stats.is_complete)
    stats.vertex_connectivity = std::max(0, g.order() - 1);
  else if (!stats.is_connected)
    stats.vertex_connectivity = 0;
  else
    stats.vertex_connectivity = static_cast<int>(min_vertex_cut(g).size());
  return stats;
}

bool alpha_at_most_2(const Graph &g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b))
        continue;
      for (Vertex c = b + 1; c < n; ++c)
        if (!g.adjacent(a, c) && !g.adjacent(b, c))
          return false;
    }
  return true;
}

std::optional<InducedPathWitness> find_induced_p4(const Graph &g) {
  for (Vertex p1 = 0; p1 < g.order(); ++p1)
    for (Vertex p2 : g.neighbors(p1))
      for (Vertex p3 : g.neighbors(p2)) {
        if (p3 == p1 || g.adjacent(p1, p3))
          continue;
        for (Vertex p4 : g.neighbors(p3)) {
          if (p4 == p2 || p4 == p1 || g.adjacent(p1, p4) || g.adjacent(p2, p4))
            continue;
          return InducedPathWitness{{p1, p2, p3, p4}};
        }
      }
  return std::nullopt;
}

CutStructure p4free_spanning_bipartition(const Graph &g) {
  CutStructure result;
  if (!is_connected(g))
    throw PreconditionError("p4free_spanning_bipartition: graph is disconnected");
  if (is_complete(g)) {
    result.graph_is_complete = true;
    return result;
  }
  if (auto p4 = find_induced_p4(g)) {
    const auto &p = p4->vertices;
    throw PreconditionError("p4free_spanning_bipartition: induced P4 " + std::to_string(p[0]) +
                            "-" + std::to_string(p[1]) + "-" + std::to_string(p[2]) + "-" +
                            std::to_string(p[3]));
  }
  result.cutset = min_vertex_cut(g);
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  for (Vertex s : result.cutset)
    removed[static_cast<std::size_t>(s)] = true;
  result.sides = components(g, removed);

  for (Vertex s : result.cutset)
    for (const auto &side : result.sides)
      for (Vertex v : side)
        if (!g.adjacent(s, v))
          throw InternalError("p4free_spanning_bipartition: cut vertex " + std::to_string(s) +
                              " misses " + std::to_string(v) + " on a P4-free input");
  result.complete_bipartite_certified = true;
  return result;
}

} // namespace pcopt

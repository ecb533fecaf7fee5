#include "pcopt/matching.hpp"

#include "pcopt/error.hpp"
#include "pcopt/properties.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace pcopt {

bool Matching::contains(Edge e) const {
  return std::binary_search(pairs.begin(), pairs.end(), make_edge(e.u, e.v));
}

std::vector<Vertex> Matching::mates(int n) const {
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  for (const Edge &e : pairs) {
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  return mate;
}

bool is_matching(const Graph &g, const Matching &m) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (const Edge &e : m.pairs) {
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.adjacent(e.u, e.v))
      return false;
    if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)])
      return false;
    used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
  }
  return true;
}

Matching forest_maximum_matching(const Graph &forest) {
  const auto n = static_cast<std::size_t>(forest.order());
  if (forest.edge_count() + components(forest).size() != n)
    throw PreconditionError("forest_maximum_matching: input has a cycle");

  // BFS order per component; scanning it backwards visits children first.
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, -1);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back(static_cast<Vertex>(root));
    while (head < order.size()) {
      const Vertex x = order[head++];
      for (Vertex y : forest.neighbors(x))
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          parent[static_cast<std::size_t>(y)] = x;
          order.push_back(y);
        }
    }
  }

  std::vector<bool> matched(n, false);
  Matching m;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const Vertex p = parent[static_cast<std::size_t>(v)];
    if (p < 0 || matched[static_cast<std::size_t>(v)] || matched[static_cast<std::size_t>(p)])
      continue;
    matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(p)] = true;
    m.pairs.push_back(make_edge(v, p));
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

Matching exhaustive_maximum_matching(const Graph &g) {
  const int n = g.order();
  if (n > max_exact_matching_order)
    throw BudgetError("maximum_matching: exact search on general graphs is capped at " +
                      std::to_string(max_exact_matching_order) + " vertices (got " +
                      std::to_string(n) + ")");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // best[mask] = maximum matching size among vertices not in mask; -1 = unknown.
  std::vector<int> best(std::size_t{1} << n, -1);

  auto solve = [&](auto &&self, std::uint32_t used) -> int {
    if (used == full)
      return 0;
    int &memo = best[used];
    if (memo >= 0)
      return memo;
    const int v = std::countr_one(used);
    const std::uint32_t with_v = used | (std::uint32_t{1} << v);
    int result = self(self, with_v);
    for (Vertex w : g.neighbors(v))
      if (!(used >> w & 1U))
        result = std::max(result, 1 + self(self, with_v | (std::uint32_t{1} << w)));
    memo = result;
    return result;
  };
  solve(solve, 0);

  Matching m;
  std::uint32_t used = 0;
  while (used != full) {
    const int v = std::countr_one(used);
    const std::uint32_t with_v = used | (std::uint32_t{1} << v);
    const int target = solve(solve, used);
    bool paired = false;
    for (Vertex w : g.neighbors(v)) {
      if (used >> w & 1U)
        continue;
      const std::uint32_t next = with_v | (std::uint32_t{1} << w);
      if (1 + solve(solve, next) == target) {
        m.pairs.push_back(make_edge(v, w));
        used = next;
        paired = true;
        break;
      }
    }
    if (!paired)
      used = with_v;
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

Matching maximum_matching(const Graph &g) {
  if (g.edge_count() + components(g).size() == static_cast<std::size_t>(g.order()))
    return forest_maximum_matching(g);
  return exhaustive_maximum_matching(g);
}

} // namespace pcopt

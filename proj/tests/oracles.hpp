// Slow, independent reference computations used to cross-check the library.
// Only Graph accessors and colorings are shared with the code under test.
#pragma once

#include "pcopt/coloring.hpp"
#include "pcopt/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using pcopt::EdgeColoring;
using pcopt::Graph;
using pcopt::Vertex;

inline bool adj(const Graph &g, int a, int b) { return a != b && g.edge_index(a, b).has_value(); }

// Floyd-Warshall distance matrix; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const Graph &g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i)
    d[i][i] = 0;
  for (const auto &e : g.edges())
    d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto &row : d)
    for (auto &x : row)
      if (x >= inf)
        x = -1;
  return d;
}

inline bool connected(const Graph &g) {
  for (const auto &row : distances(g))
    for (int x : row)
      if (x < 0)
        return false;
  return true;
}

inline int diameter(const Graph &g) {
  int best = 0;
  for (const auto &row : distances(g))
    for (int x : row)
      best = std::max(best, x);
  return best;
}

inline bool complete(const Graph &g) {
  const long n = g.order();
  return static_cast<long>(g.edge_count()) == n * (n - 1) / 2;
}

// Unpruned DFS over every simple path from u.
inline bool pc_path(const Graph &g, const EdgeColoring &c, int u, int v) {
  std::vector<bool> on(g.order(), false);
  std::function<bool(int, int)> go = [&](int x, int last) {
    if (x == v)
      return true;
    on[x] = true;
    for (int y = 0; y < g.order(); ++y) {
      if (on[y] || !adj(g, x, y))
        continue;
      const int col = c[g.edge_id(x, y)];
      if (col == last)
        continue;
      if (go(y, col)) {
        on[x] = false;
        return true;
      }
    }
    on[x] = false;
    return false;
  };
  return go(u, -1);
}

inline bool properly_connected(const Graph &g, const EdgeColoring &c) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!pc_path(g, c, u, v))
        return false;
  return true;
}

// Matching number by recursion on the least uncovered vertex.
inline int matching_number(const Graph &g) {
  std::vector<bool> used(g.order(), false);
  std::function<int(int)> go = [&](int from) {
    int x = from;
    while (x < g.order() && used[x])
      ++x;
    if (x >= g.order())
      return 0;
    used[x] = true;
    int best = go(x + 1);
    for (int y = x + 1; y < g.order(); ++y)
      if (!used[y] && adj(g, x, y)) {
        used[y] = true;
        best = std::max(best, 1 + go(x + 1));
        used[y] = false;
      }
    used[x] = false;
    return best;
  };
  return go(0);
}

inline int max_degree(const Graph &g) {
  int best = 0;
  for (int x = 0; x < g.order(); ++x) {
    int d = 0;
    for (int y = 0; y < g.order(); ++y)
      d += adj(g, x, y);
    best = std::max(best, d);
  }
  return best;
}

inline bool has_independent_triple(const Graph &g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (!adj(g, a, b) && !adj(g, a, c) && !adj(g, b, c))
          return true;
  return false;
}

// Every 4-subset, every ordering.
inline bool has_induced_p4(const Graph &g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int s[4] = {a, b, c, d};
          do {
            if (adj(g, s[0], s[1]) && adj(g, s[1], s[2]) && adj(g, s[2], s[3]) && !adj(g, s[0], s[2]) &&
                !adj(g, s[0], s[3]) && !adj(g, s[1], s[3]))
              return true;
          } while (std::next_permutation(s, s + 4));
        }
  return false;
}

// Spanning tree count: Bareiss determinant of a reduced Laplacian.
inline std::int64_t kirchhoff(const Graph &g) {
  const int n = g.order() - 1;
  if (n <= 0)
    return 1;
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (const auto &e : g.edges()) {
    if (e.u < n)
      ++m[e.u][e.u];
    if (e.v < n)
      ++m[e.v][e.v];
    if (e.u < n && e.v < n)
      m[e.u][e.v] = m[e.v][e.u] = -1;
  }
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline std::int64_t stirling2(int n, int k) {
  if (n == 0 && k == 0)
    return 1;
  if (n == 0 || k == 0)
    return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace oracle

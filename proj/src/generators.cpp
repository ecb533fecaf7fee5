#include "pcopt/generators.hpp"

#include "pcopt/error.hpp"
#include "pcopt/properties.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>

namespace pcopt {

namespace {

void require(bool ok, const std::string &what) {
  if (!ok)
    throw PreconditionError(what);
}

std::vector<Edge> clique_edges(int first, int size) {
  std::vector<Edge> edges;
  for (int i = first; i < first + size; ++i)
    for (int j = i + 1; j < first + size; ++j)
      edges.push_back({i, j});
  return edges;
}

} // namespace

Graph path_graph(int n) {
  require(n >= 1, "path: need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph star_graph(int m) {
  require(m >= 1, "star: need m >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i)
    edges.push_back({0, i});
  return Graph(m + 1, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete: need n >= 1");
  return Graph(n, clique_edges(0, n));
}

Graph complete_bipartite_graph(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite: part sizes must be >= 1");
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = m; b < m + n; ++b)
      edges.push_back({a, b});
  return Graph(m + n, edges);
}

Graph complete_multipartite_graph(std::span<const int> parts) {
  require(!parts.empty(), "complete_multipartite: need at least one part");
  std::vector<int> owner;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] >= 1, "complete_multipartite: part sizes must be >= 1");
    owner.insert(owner.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  }
  const int n = static_cast<int>(owner.size());
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (owner[static_cast<std::size_t>(a)] != owner[static_cast<std::size_t>(b)])
        edges.push_back({a, b});
  return Graph(n, edges);
}

Graph clique_cycle_blowup(std::span<const int> sizes) {
  require(sizes.size() == 5, "clique_cycle_blowup: need exactly five clique sizes");
  std::vector<int> start(6, 0);
  for (std::size_t i = 0; i < 5; ++i) {
    require(sizes[i] >= 1, "clique_cycle_blowup: clique sizes must be >= 1");
    start[i + 1] = start[i] + sizes[i];
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    auto inner = clique_edges(start[i], sizes[i]);
    edges.insert(edges.end(), inner.begin(), inner.end());
    const std::size_t j = (i + 1) % 5;
    for (int a = start[i]; a < start[i + 1]; ++a)
      for (int b = start[j]; b < start[j + 1]; ++b)
        edges.push_back(make_edge(a, b));
  }
  return Graph(start[5], edges);
}

Graph tree_from_pruefer(int n, std::span<const int> code) {
  require(n >= 2, "tree_from_pruefer: need n >= 2");
  require(code.size() == static_cast<std::size_t>(n - 2), "tree_from_pruefer: code length must be n-2");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : code) {
    require(x >= 0 && x < n, "tree_from_pruefer: code entry out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1)
      leaves.push(v);
  std::vector<Edge> edges;
  for (int x : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back(make_edge(leaf, x));
    if (--degree[static_cast<std::size_t>(x)] == 1)
      leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.push_back(make_edge(a, leaves.top()));
  return Graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree: need n >= 1");
  if (n == 1)
    return Graph(1, {});
  Rng rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int &x : code)
    x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return tree_from_pruefer(n, code);
}

Graph random_connected(int n, double edge_probability, std::uint64_t seed) {
  require(n >= 1, "random_connected: need n >= 1");
  require(edge_probability >= 0.0 && edge_probability <= 1.0,
          "random_connected: edge probability must lie in [0,1]");
  Rng rng(seed);
  constexpr int max_attempts = 100000;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.chance(edge_probability))
          edges.push_back({a, b});
    Graph g(n, edges);
    if (is_connected(g))
      return g;
  }
  throw PreconditionError("random_connected: no connected draw within the attempt limit");
}

std::vector<Vertex> random_permutation(int n, Rng &rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

namespace {

struct FamilyEntry {
  Family family;
  std::string_view name;
};

constexpr FamilyEntry family_table[] = {
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::random_tree, "random_tree"},
    {Family::random_connected, "random_connected"},
    {Family::clique_cycle_blowup, "clique_cycle_blowup"},
};

void require_params(std::span<const int> params, std::size_t count, std::string_view name) {
  if (params.size() != count)
    throw PreconditionError(std::string(name) + ": expected " + std::to_string(count) +
                            " integer parameter(s), got " + std::to_string(params.size()));
}

} // namespace

Family parse_family(std::string_view name) {
  for (const auto &entry : family_table)
    if (entry.name == name)
      return entry.family;
  throw ParseError("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  for (const auto &entry : family_table)
    if (entry.family == family)
      return entry.name;
  return "unknown";
}

Graph generate(Family kind, std::span<const int> params, std::optional<std::uint64_t> seed) {
  const auto name = family_name(kind);
  switch (kind) {
  case Family::path:
    require_params(params, 1, name);
    return path_graph(params[0]);
  case Family::cycle:
    require_params(params, 1, name);
    return cycle_graph(params[0]);
  case Family::star:
    require_params(params, 1, name);
    return star_graph(params[0]);
  case Family::complete:
    require_params(params, 1, name);
    return complete_graph(params[0]);
  case Family::complete_bipartite:
    require_params(params, 2, name);
    return complete_bipartite_graph(params[0], params[1]);
  case Family::complete_multipartite:
    return complete_multipartite_graph(params);
  case Family::random_tree:
    require_params(params, 1, name);
    return random_tree(params[0], seed.value_or(0));
  case Family::random_connected:
    require_params(params, 2, name);
    return random_connected(params[0], params[1] / 100.0, seed.value_or(0));
  case Family::clique_cycle_blowup:
    require_params(params, 5, name);
    return clique_cycle_blowup(params);
  }
  throw PreconditionError("unhandled graph family");
}

Graph generate_from_spec(std::string_view spec, std::optional<std::uint64_t> seed) {
  std::istringstream in{std::string(spec)};
  std::string kind;
  if (!(in >> kind))
    throw ParseError("empty generator spec");
  std::vector<int> params;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception &) {
      throw ParseError("generator parameter '" + token + "' is not an integer");
    }
    if (used != token.size())
      throw ParseError("generator parameter '" + token + "' is not an integer");
    params.push_back(value);
  }
  return generate(parse_family(kind), params, seed);
}

std::size_t enumerate_connected_graphs(int n, const std::function<void(const Graph &)> &visit) {
  if (n < 1)
    throw PreconditionError("enumerate_connected_graphs: need n >= 1");
  if (n > max_enumeration_order)
    throw BudgetError("enumerate_connected_graphs: n = " + std::to_string(n) +
                      " exceeds the labeled enumeration cap of " +
                      std::to_string(max_enumeration_order));
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      pairs.push_back({a, b});
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::size_t count = 0;
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // A connected graph needs at least n-1 edges.
    if (std::popcount(mask) < n - 1)
      continue;
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1U)
        edges.push_back(pairs[i]);
    Graph g(n, edges);
    if (!is_connected(g))
      continue;
    ++count;
    visit(g);
  }
  return count;
}

std::size_t enumerate_labeled_trees(int n, const std::function<void(const Graph &)> &visit) {
  if (n < 1)
    throw PreconditionError("enumerate_labeled_trees: need n >= 1");
  if (n <= 2) {
    visit(n == 1 ? Graph(1, {}) : path_graph(2));
    return 1;
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
  std::size_t count = 0;
  while (true) {
    visit(tree_from_pruefer(n, code));
    ++count;
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == n - 1)
      code[--i] = 0;
    if (i == 0)
      break;
    ++code[i - 1];
  }
  return count;
}

} // namespace pcopt

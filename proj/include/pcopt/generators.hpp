#pragma once

#include "pcopt/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcopt {

Graph path_graph(int n);
Graph cycle_graph(int n);
// K_{1,m}: centre 0, leaves 1..m.
Graph star_graph(int m);
Graph complete_graph(int n);
// Part A is 0..m-1, part B is m..m+n-1.
Graph complete_bipartite_graph(int m, int n);
// Parts occupy consecutive label ranges in the given order.
Graph complete_multipartite_graph(std::span<const int> parts);
// Five disjoint cliques A_0..A_4 (consecutive labels) with A_i joined
// completely to A_{i+1 mod 5}.
Graph clique_cycle_blowup(std::span<const int> sizes);

// Seeded generators. All randomness comes from std::mt19937_64; bounded
// integers are drawn as `rng() % bound` and reals as the top 53 bits, so
// outputs are identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

private:
  std::mt19937_64 engine_;
};

Graph tree_from_pruefer(int n, std::span<const int> code);
Graph random_tree(int n, std::uint64_t seed);
// Erdos-Renyi G(n, edge_probability) redrawn until connected.
Graph random_connected(int n, double edge_probability, std::uint64_t seed);

// Random vertex permutation, for relabeling tests and sweeps.
std::vector<Vertex> random_permutation(int n, Rng &rng);

enum class Family {
  path,
  cycle,
  star,
  complete,
  complete_bipartite,
  complete_multipartite,
  random_tree,
  random_connected,
  clique_cycle_blowup,
};

Family parse_family(std::string_view name);
std::string_view family_name(Family family);

// Family dispatch used by the CLI. random_connected takes its edge
// probability as an integer percentage: params = {n, percent}.
Graph generate(Family kind, std::span<const int> params,
               std::optional<std::uint64_t> seed = std::nullopt);

// Parses "kind p1 p2 ..." (whitespace separated).
Graph generate_from_spec(std::string_view spec, std::optional<std::uint64_t> seed = std::nullopt);

inline constexpr int max_enumeration_order = 7;

// Visits every labeled connected simple graph on n vertices exactly once, in
// increasing order of the edge bitmask over canonical vertex pairs. n is
// capped at max_enumeration_order. Returns the number of graphs visited.
std::size_t enumerate_connected_graphs(int n, const std::function<void(const Graph &)> &visit);

// Visits every labeled tree on n vertices via Pruefer codes in lexicographic
// code order. Returns the number of trees visited.
std::size_t enumerate_labeled_trees(int n, const std::function<void(const Graph &)> &visit);

} // namespace pcopt

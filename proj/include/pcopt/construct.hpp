#pragma once

#include "pcopt/coloring.hpp"
#include "pcopt/graph.hpp"
#include "pcopt/matching.hpp"
#include "pcopt/search.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace pcopt {

// opt: minimise edges + colors. prime: minimise recolored edges only.
enum class Variant { opt, prime };

// An edge x1x2 such that every vertex outside N(x1) ∩ N(x2) ∪ {x1, x2} lies
// in exactly one of the cliques part_a1 ⊆ N(x1), part_a2 ⊆ N(x2).
struct GoodEdgeWitness {
  Edge edge;
  std::vector<Vertex> part_a1;
  std::vector<Vertex> part_a2;
};

std::optional<GoodEdgeWitness> good_edge_witness(const Graph &g, Edge e);
// First good edge in canonical edge order. Requires order >= 3.
std::optional<GoodEdgeWitness> find_good_edge(const Graph &g);
// Color 1 on the first good edge: p = 1, q = 1.
Recoloring recolor_good_edge(const Graph &g);

// Partition of V(g) into two sides with every cross pair adjacent.
struct Bipartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

bool is_spanning_complete_bipartition(const Graph &g, const Bipartition &parts);

// A spanning complete bipartition whose sides both contain an edge of g.
// Sides are unions of components of the complement; with k >= 4 such
// components the first two form side A, with k = 3 a single component that
// has an internal edge faces the other two, with k = 2 both must have one.
std::optional<Bipartition> find_spanning_bipartition_with_edges(const Graph &g);

// Color 1 on the least internal edge of each side: p = 2, q = 1.
Recoloring recolor_spanning_bipartite(const Graph &g, const std::optional<Bipartition> &parts = std::nullopt);

// Connected graph with no independent triple: cost <= 3 (prime: p <= 2).
Recoloring recolor_alpha2(const Graph &g, Variant variant = Variant::opt);

// The two sides when g is exactly a complete bipartite graph: side_a is the
// larger side (on a tie, the one holding vertex 0).
std::optional<Bipartition> detect_complete_bipartite(const Graph &g);

// Recoloring for a graph containing the complete bipartite graph between
// sides.side_a (the larger side, size m) and sides.side_b (size n) as a
// spanning subgraph, with m >= n >= 2 and m + n >= 9. Cost 4 with two
// colors when n <= 3, cost 5 when n >= 4.
Recoloring recolor_complete_bipartite(const Graph &g, const Bipartition &sides, Variant variant = Variant::opt);

struct CompleteBipartiteInstance {
  Graph graph;
  Bipartition sides;
  Recoloring recoloring;
};

// Builds K_{m,n} (large side 0..m-1) and recolors it.
CompleteBipartiteInstance recolor_complete_bipartite(int m, int n, Variant variant = Variant::opt);

struct TreePlan {
  Matching matching;                 // kept at color 0
  std::vector<Assignment> forest_colors; // every non-matching edge
  int cost_p = 0;
  int cost_q = 0;

  Recoloring recoloring() const { return Recoloring(forest_colors); }
  int total() const { return cost_p + cost_q; }
};

// n - 2 - (matching number) + (max degree) for a tree with n >= 2.
int tree_formula(const Graph &tree);
// n - 1 - (matching number).
int tree_prime_formula(const Graph &tree);

TreePlan recolor_tree(const Graph &tree, Variant variant = Variant::opt);

struct Bounds {
  int lower = 0;
  int upper = 0;
  bool complete = false;
  bool exhaustive = true; // every spanning tree was examined
  std::size_t trees_examined = 0;
};

// floor(diam/2) + 1 below, best spanning-tree formula above.
Bounds bounds(const Graph &g, std::size_t tree_budget = 100000);

enum class ConstructClass { automatic, tree, complete_bipartite, alpha2, good_edge, bipartite_spanning };

ConstructClass parse_construct_class(std::string_view name);

struct Construction {
  Certificate certificate;
  std::string method; // the construction actually used, or "exact-search"
};

// Runs the requested construction (or, for automatic: complete, tree,
// complete bipartite, good edge, alpha2, spanning bipartite, then exact
// search) and packages the validated result as a certificate.
// complete-bipartite outside its size range falls back to exact search.
Construction construct(const Graph &g, ConstructClass cls, Variant variant = Variant::opt,
                       const SearchBudget &budget = {});

} // namespace pcopt

#pragma once

#include "pcopt/graph.hpp"

#include <vector>

namespace pcopt {

struct Matching {
  std::vector<Edge> pairs; // sorted, pairwise disjoint

  std::size_t size() const { return pairs.size(); }
  bool contains(Edge e) const;
  // mate[v] is v's partner, or -1.
  std::vector<Vertex> mates(int n) const;
};

inline constexpr int max_exact_matching_order = 16;

// Maximum-cardinality matching. Forests of any size use leaf pruning; other
// graphs use an exhaustive subset recursion capped at
// max_exact_matching_order vertices (BudgetError beyond).
Matching maximum_matching(const Graph &g);

// Leaf-pruning greedy on a forest: repeatedly match a leaf to its parent.
Matching forest_maximum_matching(const Graph &forest);

// Memoised recursion over vertex subsets; exact for any graph up to the cap.
Matching exhaustive_maximum_matching(const Graph &g);

bool is_matching(const Graph &g, const Matching &m);

} // namespace pcopt

#pragma once

#include "pcopt/graph.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace pcopt {

inline constexpr std::size_t default_spanning_tree_cap = 100000;

// Visits spanning trees of a connected graph without repetition, branching on
// edges in canonical order (include before exclude). The visitor returns
// false to stop early. Returns the number of trees visited.
std::size_t for_each_spanning_tree(const Graph &g, const std::function<bool(const Graph &)> &visit);

// All spanning trees; BudgetError (carrying the partial count) when there are
// more than `cap`.
std::vector<Graph> spanning_trees(const Graph &g, std::size_t cap = default_spanning_tree_cap);

} // namespace pcopt

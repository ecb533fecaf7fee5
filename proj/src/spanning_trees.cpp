#include "pcopt/spanning_trees.hpp"

#include "pcopt/error.hpp"
#include "pcopt/properties.hpp"

#include <numeric>

namespace pcopt {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto &p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }

  std::vector<int> parent;
};

class TreeWalker {
public:
  TreeWalker(const Graph &g, const std::function<bool(const Graph &)> &visit) : g_(g), visit_(visit) {}

  std::size_t run() {
    DisjointSets sets(static_cast<std::size_t>(g_.order()));
    descend(0, sets);
    return count_;
  }

private:
  // Would the chosen edges plus every edge from `from` onwards still connect g?
  bool still_connectable(std::size_t from, DisjointSets sets) const {
    int merges = static_cast<int>(chosen_.size());
    for (std::size_t i = from; i < g_.edge_count(); ++i)
      if (sets.unite(g_.edge(i).u, g_.edge(i).v))
        ++merges;
    return merges == g_.order() - 1;
  }

  // Returns false once the visitor asked to stop.
  bool descend(std::size_t next, DisjointSets &sets) {
    if (static_cast<int>(chosen_.size()) == g_.order() - 1) {
      ++count_;
      return visit_(spanning_subgraph(g_, chosen_));
    }
    if (next == g_.edge_count())
      return true;
    const Edge &e = g_.edge(next);
    if (sets.find(e.u) != sets.find(e.v)) {
      DisjointSets with = sets;
      with.unite(e.u, e.v);
      chosen_.push_back(next);
      const bool go_on = descend(next + 1, with);
      chosen_.pop_back();
      if (!go_on)
        return false;
    }
    if (still_connectable(next + 1, sets))
      return descend(next + 1, sets);
    return true;
  }

  const Graph &g_;
  const std::function<bool(const Graph &)> &visit_;
  std::vector<EdgeId> chosen_;
  std::size_t count_ = 0;
};

} // namespace

std::size_t for_each_spanning_tree(const Graph &g, const std::function<bool(const Graph &)> &visit) {
  if (g.order() == 0)
    return 0;
  if (!is_connected(g))
    throw PreconditionError("spanning_trees: graph is disconnected");
  return TreeWalker(g, visit).run();
}

std::vector<Graph> spanning_trees(const Graph &g, std::size_t cap) {
  std::vector<Graph> trees;
  bool overflow = false;
  for_each_spanning_tree(g, [&](const Graph &t) {
    if (trees.size() == cap) {
      overflow = true;
      return false;
    }
    trees.push_back(t);
    return true;
  });
  if (overflow)
    throw BudgetError("spanning_trees: more than " + std::to_string(cap) + " spanning trees",
                      std::nullopt, trees.size());
  return trees;
}

} // namespace pcopt

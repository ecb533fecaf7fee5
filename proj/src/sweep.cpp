#include "pcopt/sweep.hpp"

#include "pcopt/check.hpp"
#include "pcopt/construct.hpp"
#include "pcopt/error.hpp"
#include "pcopt/generators.hpp"
#include "pcopt/io.hpp"
#include "pcopt/properties.hpp"
#include "pcopt/search.hpp"

#include <algorithm>
#include <functional>

namespace pcopt {

namespace {

class Tally {
public:
  explicit Tally(std::string_view suite) { result_.suite = suite; }

  void record(bool ok, const Graph &g, std::string_view what) {
    ++result_.checked;
    if (ok)
      return;
    ++result_.failed;
    if (!result_.first_failure)
      result_.first_failure = std::string(what) + " on graph6 " + format_graph6(g);
  }

  SweepResult done() { return std::move(result_); }

private:
  SweepResult result_;
};

void each_connected(int lo, int hi, const std::function<void(const Graph &)> &visit) {
  for (int n = lo; n <= hi; ++n)
    enumerate_connected_graphs(n, visit);
}

SweepResult good_edge_suite(int max_n) {
  Tally tally("good-edge");
  each_connected(3, max_n, [&](const Graph &g) {
    const bool by_structure = find_good_edge(g).has_value();
    const bool by_search = feasible(g, 1, 1).has_value();
    tally.record(by_structure == by_search, g, "good edge vs (1,1)-feasibility");
  });
  return tally.done();
}

SweepResult tree_suite(int max_n) {
  Tally tally("tree");
  for (int n = 2; n <= max_n; ++n)
    enumerate_labeled_trees(n, [&](const Graph &t) {
      const TreePlan plan = recolor_tree(t);
      const bool ok = plan.total() == tree_formula(t) && plan.total() == pc_opt_exact(t).value;
      tally.record(ok, t, "tree construction vs formula vs exact");
    });
  return tally.done();
}

SweepResult alpha2_suite(int max_n) {
  Tally tally("alpha2");
  each_connected(1, max_n, [&](const Graph &g) {
    if (!alpha_at_most_2(g))
      return;
    const Recoloring r = recolor_alpha2(g, Variant::opt);
    const Recoloring rp = recolor_alpha2(g, Variant::prime);
    const bool ok = r.cost() <= 3 && rp.p() <= 2 &&
                    is_properly_connected(g, apply_recoloring(g, r)).properly_connected &&
                    is_properly_connected(g, apply_recoloring(g, rp)).properly_connected;
    tally.record(ok, g, "alpha <= 2 construction");
  });
  return tally.done();
}

SweepResult p4free_suite(int max_n) {
  Tally tally("p4free");
  each_connected(1, max_n, [&](const Graph &g) {
    if (is_complete(g) || find_induced_p4(g))
      return;
    const CutStructure cut = p4free_spanning_bipartition(g);
    tally.record(cut.complete_bipartite_certified && cut.sides.size() >= 2, g, "P4-free cut structure");
  });
  return tally.done();
}

SweepResult complete_zero_suite(int max_n) {
  Tally tally("complete-zero");
  each_connected(1, max_n, [&](const Graph &g) {
    tally.record((pc_opt_exact(g).value == 0) == is_complete(g), g, "zero cost iff complete");
  });
  return tally.done();
}

SweepResult filter_suite(int max_n, std::uint64_t seed) {
  Tally tally("filter");
  Rng rng(seed);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.between(2, max_n);
    const Graph g = random_connected(n, 0.25 + 0.5 * rng.unit(), rng.next());
    EdgeColoring c = EdgeColoring::monochromatic(g);
    const int colors = rng.between(1, 3);
    for (EdgeId id = 0; id < g.edge_count(); ++id)
      c[id] = static_cast<Color>(rng.below(static_cast<std::uint64_t>(colors)));
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      const auto reach = pc_walk_reachable(g, c, u);
      for (Vertex v = 0; v < n && ok; ++v)
        if (v != u && exists_pc_path(g, c, u, v))
          ok = std::binary_search(reach.begin(), reach.end(), v);
    }
    tally.record(ok, g, "path reachability inside walk reachability");
  }
  return tally.done();
}

SweepResult bounds_suite(int max_n, std::uint64_t seed) {
  Rng rng(seed);
  Tally out("bounds");
  int done = 0;
  while (done < 100) {
    const int n = rng.between(3, max_n);
    const Graph g = random_connected(n, 0.2 + 0.6 * rng.unit(), rng.next());
    if (is_complete(g))
      continue;
    ++done;
    const Bounds b = bounds(g);
    const int exact = pc_opt_exact(g).value;
    out.record(b.lower <= exact && exact <= b.upper, g, "diameter bound <= exact <= spanning tree bound");
  }
  return out.done();
}

} // namespace

std::vector<std::string_view> sweep_names() {
  return {"good-edge", "tree", "alpha2", "p4free", "complete-zero", "filter", "bounds"};
}

SweepResult run_sweep(std::string_view suite, int max_n, std::uint64_t seed) {
  auto bound = [&](int fallback, int cap) {
    const int n = max_n > 0 ? max_n : fallback;
    if (n > cap)
      throw BudgetError("sweep '" + std::string(suite) + "': order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
    return n;
  };
  if (suite == "good-edge")
    return good_edge_suite(bound(6, max_enumeration_order));
  if (suite == "tree")
    return tree_suite(bound(7, 9));
  if (suite == "alpha2")
    return alpha2_suite(bound(6, max_enumeration_order));
  if (suite == "p4free")
    return p4free_suite(bound(7, max_enumeration_order));
  if (suite == "complete-zero")
    return complete_zero_suite(bound(5, max_enumeration_order));
  if (suite == "filter")
    return filter_suite(std::max(2, bound(8, 12)), seed);
  if (suite == "bounds")
    return bounds_suite(std::max(3, bound(8, 9)), seed);
  throw ParseError("unknown sweep suite '" + std::string(suite) + "'");
}

} // namespace pcopt

#include "pcopt/construct.hpp"

#include "pcopt/check.hpp"
#include "pcopt/error.hpp"
#include "pcopt/generators.hpp"
#include "pcopt/properties.hpp"
#include "pcopt/spanning_trees.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pcopt {

namespace {

std::string edge_text(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

bool properly_connects(const Graph &g, const Recoloring &r) {
  const auto c = apply_recoloring(g, r);
  // On a tree the unique path between two vertices is the only candidate, so
  // proper connection reduces to proper coloring.
  if (is_tree(g))
    return is_properly_colored(g, c).properly_colored;
  return is_properly_connected(g, c).properly_connected;
}

void validate(const Graph &g, const Recoloring &r, std::string_view what) {
  if (!properly_connects(g, r))
    throw InternalError(std::string(what) + ": constructed recoloring does not make the graph properly connected");
}

bool is_clique(const Graph &g, const std::vector<Vertex> &vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j]))
        return false;
  return true;
}

std::optional<Edge> least_internal_edge(const Graph &g, const std::vector<Vertex> &side) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : side)
    in[static_cast<std::size_t>(v)] = true;
  for (const Edge &e : g.edges())
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
      return e;
  return std::nullopt;
}

std::vector<Vertex> complement_of(const Graph &g, const std::vector<Vertex> &side) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : side)
    in[static_cast<std::size_t>(v)] = true;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in[static_cast<std::size_t>(v)])
      rest.push_back(v);
  return rest;
}

void require_connected(const Graph &g, std::string_view what) {
  if (!is_connected(g))
    throw PreconditionError(std::string(what) + ": graph is disconnected");
}

} // namespace

// ---------------------------------------------------------------- good edge

std::optional<GoodEdgeWitness> good_edge_witness(const Graph &g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.adjacent(e.u, e.v))
    throw PreconditionError("good_edge_witness: " + edge_text(e) + " is not an edge");
  GoodEdgeWitness w{e, {}, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == e.u || v == e.v)
      continue;
    const bool near_u = g.adjacent(v, e.u);
    const bool near_v = g.adjacent(v, e.v);
    if (near_u && near_v)
      continue;
    if (!near_u && !near_v)
      return std::nullopt;
    (near_u ? w.part_a1 : w.part_a2).push_back(v);
  }
  if (!is_clique(g, w.part_a1) || !is_clique(g, w.part_a2))
    return std::nullopt;
  return w;
}

std::optional<GoodEdgeWitness> find_good_edge(const Graph &g) {
  if (g.order() < 3)
    throw PreconditionError("find_good_edge: graph must have at least 3 vertices");
  require_connected(g, "find_good_edge");
  for (const Edge &e : g.edges())
    if (auto w = good_edge_witness(g, e))
      return w;
  return std::nullopt;
}

Recoloring recolor_good_edge(const Graph &g) {
  const auto w = find_good_edge(g);
  if (!w)
    throw NotApplicableError("recolor_good_edge: graph has no good edge");
  Recoloring r({{w->edge, 1}});
  validate(g, r, "recolor_good_edge");
  return r;
}

// ------------------------------------------------------ spanning bipartite

bool is_spanning_complete_bipartition(const Graph &g, const Bipartition &parts) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  auto place = [&](const std::vector<Vertex> &vs, int label) {
    for (Vertex v : vs) {
      if (!g.has_vertex(v) || side[static_cast<std::size_t>(v)] != -1)
        return false;
      side[static_cast<std::size_t>(v)] = label;
    }
    return true;
  };
  if (parts.side_a.empty() || parts.side_b.empty() || !place(parts.side_a, 0) || !place(parts.side_b, 1))
    return false;
  if (std::count(side.begin(), side.end(), -1) != 0)
    return false;
  for (Vertex a : parts.side_a)
    for (Vertex b : parts.side_b)
      if (!g.adjacent(a, b))
        return false;
  return true;
}

std::optional<Bipartition> find_spanning_bipartition_with_edges(const Graph &g) {
  const auto n = static_cast<std::size_t>(g.order());
  // Components of the complement, discovered from the least unvisited vertex.
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)])
      continue;
    auto &comp = comps.emplace_back();
    std::vector<Vertex> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y = 0; y < g.order(); ++y)
        if (y != x && !seen[static_cast<std::size_t>(y)] && !g.adjacent(x, y)) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
  }

  const std::size_t k = comps.size();
  auto join = [&](std::initializer_list<std::size_t> picks) {
    Bipartition parts;
    for (std::size_t i = 0; i < k; ++i) {
      auto &target = std::find(picks.begin(), picks.end(), i) != picks.end() ? parts.side_a : parts.side_b;
      target.insert(target.end(), comps[i].begin(), comps[i].end());
    }
    std::sort(parts.side_a.begin(), parts.side_a.end());
    std::sort(parts.side_b.begin(), parts.side_b.end());
    return parts;
  };
  auto has_edge = [&](std::size_t i) { return least_internal_edge(g, comps[i]).has_value(); };

  if (k >= 4)
    return join({0, 1});
  if (k == 3) {
    for (std::size_t i = 0; i < 3; ++i)
      if (has_edge(i))
        return join({i});
    return std::nullopt;
  }
  if (k == 2 && has_edge(0) && has_edge(1))
    return join({0});
  return std::nullopt;
}

Recoloring recolor_spanning_bipartite(const Graph &g, const std::optional<Bipartition> &parts) {
  Bipartition chosen;
  if (parts) {
    if (!is_spanning_complete_bipartition(g, *parts))
      throw PreconditionError("recolor_spanning_bipartite: sides do not form a spanning complete bipartite subgraph");
    chosen = *parts;
  } else if (auto found = find_spanning_bipartition_with_edges(g)) {
    chosen = std::move(*found);
  } else {
    throw NotApplicableError("recolor_spanning_bipartite: no spanning complete bipartite subgraph with an edge inside each side");
  }
  const auto e1 = least_internal_edge(g, chosen.side_a);
  const auto e2 = least_internal_edge(g, chosen.side_b);
  if (!e1 || !e2)
    throw NotApplicableError("recolor_spanning_bipartite: a side has no internal edge");
  Recoloring r({{*e1, 1}, {*e2, 1}});
  validate(g, r, "recolor_spanning_bipartite");
  return r;
}

// ------------------------------------------------------------------- alpha 2

Recoloring recolor_alpha2(const Graph &g, Variant variant) {
  require_connected(g, "recolor_alpha2");
  if (!alpha_at_most_2(g))
    throw PreconditionError("recolor_alpha2: graph has three pairwise non-adjacent vertices");
  if (is_complete(g))
    return {};

  auto within_promise = [&](const Recoloring &r) {
    return variant == Variant::opt ? r.cost() <= 3 : r.p() <= 2;
  };

  if (const auto p4 = find_induced_p4(g)) {
    const auto &v = p4->vertices;
    Recoloring r({{make_edge(v[0], v[1]), 1}, {make_edge(v[2], v[3]), 1}});
    validate(g, r, "recolor_alpha2");
    return r;
  }

  // P4-free: a minimum cutset S is completely joined to the rest.
  const CutStructure cut = p4free_spanning_bipartition(g);
  const std::vector<Vertex> outside = complement_of(g, cut.cutset);

  if (cut.cutset.size() == 1 && find_good_edge(g)) {
    Recoloring r({{find_good_edge(g)->edge, 1}});
    if (properly_connects(g, r))
      return r;
  }

  const Bipartition split{cut.cutset, outside};
  const auto e1 = least_internal_edge(g, split.side_a);
  const auto e2 = least_internal_edge(g, split.side_b);
  if (e1 && e2) {
    Recoloring r({{*e1, 1}, {*e2, 1}});
    if (properly_connects(g, r))
      return r;
  }

  if (cut.cutset.size() >= 2 && outside.size() >= 2) {
    Recoloring r({{make_edge(cut.cutset[0], outside[0]), 1}, {make_edge(cut.cutset[1], outside[1]), 1}});
    if (properly_connects(g, r))
      return r;
  }

  SearchBudget capped;
  capped.max_total_cost = 3;
  try {
    const Certificate cert = pc_opt_exact(g, capped);
    if (cert.witness && within_promise(*cert.witness))
      return *cert.witness;
  } catch (const BudgetError &) {
  }
  throw InternalError("recolor_alpha2: no recoloring of cost <= 3 found for a graph without independent triples");
}

// ------------------------------------------------------- complete bipartite

std::optional<Bipartition> detect_complete_bipartite(const Graph &g) {
  if (g.order() < 2 || !is_connected(g))
    return std::nullopt;
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue{0};
  side[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      auto &s = side[static_cast<std::size_t>(y)];
      if (s == -1) {
        s = 1 - side[static_cast<std::size_t>(x)];
        queue.push_back(y);
      } else if (s == side[static_cast<std::size_t>(x)]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v)
    (side[static_cast<std::size_t>(v)] == 0 ? parts.side_a : parts.side_b).push_back(v);
  if (g.edge_count() != parts.side_a.size() * parts.side_b.size())
    return std::nullopt;
  if (parts.side_b.size() > parts.side_a.size())
    std::swap(parts.side_a, parts.side_b);
  return parts;
}

Recoloring recolor_complete_bipartite(const Graph &g, const Bipartition &sides, Variant variant) {
  const auto m = sides.side_a.size();
  const auto n = sides.side_b.size();
  if (!is_spanning_complete_bipartition(g, sides))
    throw PreconditionError("recolor_complete_bipartite: sides do not span a complete bipartite subgraph");
  if (m < n)
    throw PreconditionError("recolor_complete_bipartite: side_a must be the larger side");
  if (n < 2)
    throw NotApplicableError("recolor_complete_bipartite: smaller side has one vertex (a star); use the tree construction");
  if (m + n < 9)
    throw NotApplicableError("recolor_complete_bipartite: K_{" + std::to_string(m) + "," + std::to_string(n) +
                             "} is outside the theorem range m + n >= 9");

  auto small = sides.side_b;
  auto large = sides.side_a;
  std::sort(small.begin(), small.end());
  std::sort(large.begin(), large.end());
  const Vertex a = small[0], b = small[1], x = large[0], y = large[1];

  std::vector<Assignment> out{{make_edge(a, x), 1}, {make_edge(b, x), 2}};
  if (n >= 4)
    out.push_back({make_edge(b, y), 1});
  Recoloring r(std::move(out));

  const int promised = variant == Variant::opt ? (n <= 3 ? 4 : 5) : (n <= 3 ? 2 : 3);
  const int achieved = variant == Variant::opt ? r.cost() : r.p();
  if (achieved != promised)
    throw InternalError("recolor_complete_bipartite: cost " + std::to_string(achieved) + " differs from " +
                        std::to_string(promised));
  validate(g, r, "recolor_complete_bipartite");
  return r;
}

CompleteBipartiteInstance recolor_complete_bipartite(int m, int n, Variant variant) {
  if (m < n)
    throw PreconditionError("recolor_complete_bipartite: need m >= n");
  CompleteBipartiteInstance inst;
  inst.graph = complete_bipartite_graph(m, n);
  for (Vertex v = 0; v < m; ++v)
    inst.sides.side_a.push_back(v);
  for (Vertex v = m; v < m + n; ++v)
    inst.sides.side_b.push_back(v);
  inst.recoloring = recolor_complete_bipartite(inst.graph, inst.sides, variant);
  return inst;
}

// ---------------------------------------------------------------------- trees

int tree_formula(const Graph &tree) {
  return tree.order() - 2 - static_cast<int>(forest_maximum_matching(tree).size()) + max_degree(tree);
}

int tree_prime_formula(const Graph &tree) {
  return tree.order() - 1 - static_cast<int>(forest_maximum_matching(tree).size());
}

namespace {

// Swaps matching edges along a maximal alternating path from an unmatched
// maximum-degree vertex, which leaves a leaf unmatched instead.
void exchange_along_alternating_path(const Graph &t, std::vector<Vertex> &mate, Vertex start) {
  std::vector<Vertex> path{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    // cur is either the start or was reached through its matching edge.
    Vertex next = -1;
    for (Vertex y : t.neighbors(cur))
      if (y != prev && y != mate[static_cast<std::size_t>(cur)]) {
        next = y;
        break;
      }
    if (next < 0)
      break;
    const Vertex partner = mate[static_cast<std::size_t>(next)];
    if (partner < 0)
      throw InternalError("recolor_tree: augmenting path found, matching was not maximum");
    path.push_back(next);
    path.push_back(partner);
    prev = next;
    cur = partner;
  }
  if (path.size() < 3 || t.degree(path.back()) != 1)
    throw InternalError("recolor_tree: alternating path does not end at a leaf");

  for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
    mate[static_cast<std::size_t>(path[i])] = -1;
    mate[static_cast<std::size_t>(path[i + 1])] = -1;
  }
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
    mate[static_cast<std::size_t>(path[i])] = path[i + 1];
    mate[static_cast<std::size_t>(path[i + 1])] = path[i];
  }
}

} // namespace

TreePlan recolor_tree(const Graph &tree, Variant variant) {
  const int n = tree.order();
  if (n < 2 || !is_tree(tree))
    throw PreconditionError("recolor_tree: input must be a tree with at least 2 vertices");

  const int delta = max_degree(tree);
  auto mate = forest_maximum_matching(tree).mates(n);

  for (int iteration = 0;; ++iteration) {
    Vertex bad = -1;
    for (Vertex v = 0; v < n && bad < 0; ++v)
      if (mate[static_cast<std::size_t>(v)] < 0 && tree.degree(v) == delta)
        bad = v;
    if (bad < 0)
      break;
    if (iteration >= n)
      throw InternalError("recolor_tree: matching exchange did not terminate");
    exchange_along_alternating_path(tree, mate, bad);
  }

  TreePlan plan;
  for (Vertex v = 0; v < n; ++v)
    if (mate[static_cast<std::size_t>(v)] > v)
      plan.matching.pairs.push_back({v, mate[static_cast<std::size_t>(v)]});

  // Greedy proper edge coloring of the forest tree - matching, rooted at the
  // least vertex of each component.
  const int palette = delta - 1;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Color> parent_color(static_cast<std::size_t>(n), base_color);
  std::set<Color> used;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)])
      continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      Color next = 1;
      for (Vertex y : tree.neighbors(x)) {
        if (seen[static_cast<std::size_t>(y)] || mate[static_cast<std::size_t>(x)] == y)
          continue;
        if (next == parent_color[static_cast<std::size_t>(x)])
          ++next;
        if (next > palette)
          throw InternalError("recolor_tree: forest needs more than max degree - 1 colors");
        seen[static_cast<std::size_t>(y)] = true;
        parent_color[static_cast<std::size_t>(y)] = next;
        plan.forest_colors.push_back({make_edge(x, y), next});
        used.insert(next);
        queue.push_back(y);
        ++next;
      }
    }
    // Matched partners not yet reached are roots of their own components.
  }
  std::sort(plan.forest_colors.begin(), plan.forest_colors.end());
  plan.cost_p = static_cast<int>(plan.forest_colors.size());
  plan.cost_q = static_cast<int>(used.size());

  const int promised = variant == Variant::opt ? tree_formula(tree) : tree_prime_formula(tree);
  const int achieved = variant == Variant::opt ? plan.total() : plan.cost_p;
  if (achieved != promised)
    throw InternalError("recolor_tree: cost " + std::to_string(achieved) + " differs from the formula value " +
                        std::to_string(promised));
  if (!is_properly_colored(tree, apply_recoloring(tree, plan.recoloring())).properly_colored)
    throw InternalError("recolor_tree: plan is not a proper edge coloring");
  return plan;
}

// --------------------------------------------------------------------- bounds

Bounds bounds(const Graph &g, std::size_t tree_budget) {
  require_connected(g, "bounds");
  Bounds result;
  if (is_complete(g)) {
    result.complete = true;
    return result;
  }
  result.lower = *diameter(g) / 2 + 1;
  result.upper = -1;
  bool more = false;
  for_each_spanning_tree(g, [&](const Graph &t) {
    if (result.trees_examined == tree_budget) {
      more = true;
      return false;
    }
    ++result.trees_examined;
    const int value = tree_formula(t);
    if (result.upper < 0 || value < result.upper)
      result.upper = value;
    return true;
  });
  result.exhaustive = !more;
  if (result.upper < 0)
    throw PreconditionError("bounds: tree budget of 0 examines no spanning tree");
  return result;
}

// ------------------------------------------------------------------- dispatch

ConstructClass parse_construct_class(std::string_view name) {
  if (name == "auto")
    return ConstructClass::automatic;
  if (name == "tree")
    return ConstructClass::tree;
  if (name == "complete-bipartite")
    return ConstructClass::complete_bipartite;
  if (name == "alpha2")
    return ConstructClass::alpha2;
  if (name == "good-edge")
    return ConstructClass::good_edge;
  if (name == "bipartite-spanning")
    return ConstructClass::bipartite_spanning;
  throw ParseError("unknown construction class '" + std::string(name) + "'");
}

namespace {

Construction from_exact_search(const Graph &g, Variant variant, const SearchBudget &budget) {
  return {variant == Variant::opt ? pc_opt_exact(g, budget) : pc_opt_prime_exact(g, budget), "exact-search"};
}

Construction package(const Graph &g, Recoloring r, std::string method, Variant variant, bool formula_exact) {
  Construction out;
  out.method = method;
  auto &cert = out.certificate;
  cert.objective = variant == Variant::opt ? Objective::total : Objective::prime;
  cert.value = variant == Variant::opt ? r.cost() : r.p();
  cert.evidence = "theorem:" + method;
  if (!r.empty())
    cert.witness = std::move(r);

  // The smallest costs are settled by counting; cost 3 (prime: 2) is exact
  // once no single recolored edge works.
  const int single_edge_value = variant == Variant::opt ? 2 : 1;
  const int diameter_floor = *diameter(g) / 2 + (variant == Variant::opt ? 1 : 0);
  if (formula_exact || cert.value == 0 || (cert.value == single_edge_value && !is_complete(g)))
    cert.lower_bound_proof = formula_exact ? LowerBoundProof::formula : LowerBoundProof::exhausted_below;
  else if (cert.value == single_edge_value + 1 && !feasible(g, 1, 1))
    cert.lower_bound_proof = LowerBoundProof::exhausted_below;
  else if (cert.value == diameter_floor)
    cert.lower_bound_proof = LowerBoundProof::diameter_bound;
  else
    cert.lower_bound_proof = LowerBoundProof::none;
  return out;
}

bool in_bipartite_range(const Bipartition &parts) {
  return parts.side_b.size() >= 2 && parts.side_a.size() + parts.side_b.size() >= 9;
}

} // namespace

Construction construct(const Graph &g, ConstructClass cls, Variant variant, const SearchBudget &budget) {
  require_connected(g, "construct");
  switch (cls) {
  case ConstructClass::tree:
    return package(g, recolor_tree(g, variant).recoloring(), "tree-formula", variant, true);
  case ConstructClass::complete_bipartite: {
    const auto parts = detect_complete_bipartite(g);
    if (!parts)
      throw PreconditionError("construct: graph is not complete bipartite");
    if (!in_bipartite_range(*parts))
      return from_exact_search(g, variant, budget);
    return package(g, recolor_complete_bipartite(g, *parts, variant), "complete-bipartite", variant, true);
  }
  case ConstructClass::alpha2:
    return package(g, recolor_alpha2(g, variant), "alpha2", variant, false);
  case ConstructClass::good_edge:
    return package(g, recolor_good_edge(g), "good-edge", variant, false);
  case ConstructClass::bipartite_spanning:
    return package(g, recolor_spanning_bipartite(g), "spanning-bipartite", variant, false);
  case ConstructClass::automatic:
    break;
  }

  if (is_complete(g))
    return package(g, Recoloring{}, "complete", variant, false);
  if (is_tree(g))
    return construct(g, ConstructClass::tree, variant, budget);
  if (const auto parts = detect_complete_bipartite(g); parts && in_bipartite_range(*parts))
    return construct(g, ConstructClass::complete_bipartite, variant, budget);
  if (g.order() >= 3 && find_good_edge(g))
    return construct(g, ConstructClass::good_edge, variant, budget);
  if (alpha_at_most_2(g))
    return construct(g, ConstructClass::alpha2, variant, budget);
  if (find_spanning_bipartition_with_edges(g))
    return construct(g, ConstructClass::bipartite_spanning, variant, budget);
  return from_exact_search(g, variant, budget);
}

} // namespace pcopt

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"
#include "pcopt/check.hpp"
#include "pcopt/construct.hpp"
#include "pcopt/generators.hpp"
#include "pcopt/properties.hpp"
#include "pcopt/search.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace pcopt;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string &what) {
    ++checks;
    if (!ok)
      failures.push_back(what);
  }
};

std::string str(int x) { return std::to_string(x); }

bool sound(const Graph &g, const Recoloring &r) { return oracle::properly_connected(g, apply_recoloring(g, r)); }

bool certified(const Graph &g, const Certificate &c) {
  return !certificate_failure(g, c).has_value() &&
         (!c.witness || oracle::properly_connected(g, apply_recoloring(g, *c.witness)));
}

Graph random_alpha2(int n, Rng &rng) {
  while (true) {
    const Graph g = random_connected(n, 0.55 + 0.3 * rng.unit(), rng.next());
    if (!oracle::has_independent_triple(g))
      return g;
  }
}

Outcome values_table() {
  Outcome out;
  const int bip[4][3] = {{2, 3, 3}, {3, 3, 3}, {3, 4, 4}, {4, 4, 4}};
  for (const auto &row : bip) {
    const Graph g = complete_bipartite_graph(row[0], row[1]);
    const Certificate c = pc_opt_exact(g);
    out.expect(c.value == row[2] && certified(g, c),
               "K_{" + str(row[0]) + "," + str(row[1]) + "}: got " + str(c.value) + ", expected " + str(row[2]));
  }
  for (int m = 2; m <= 5; ++m) {
    const Certificate c = pc_opt_exact(star_graph(m));
    out.expect(c.value == 2 * m - 2, "K_{1," + str(m) + "}: got " + str(c.value) + ", expected " + str(2 * m - 2));
  }
  for (int n = 3; n <= 8; ++n) {
    const int expected = (n - 1) / 2 + 1;
    const Certificate p = pc_opt_exact(path_graph(n));
    out.expect(p.value == expected, "P_" + str(n) + ": got " + str(p.value) + ", expected " + str(expected));
    const Graph cyc = cycle_graph(n);
    const Certificate c = pc_opt_exact(cyc);
    out.expect(c.value == expected && certified(cyc, c),
               "C_" + str(n) + ": got " + str(c.value) + ", expected " + str(expected) +
                   (oracle::complete(cyc) ? " (C_" + str(n) + " is complete, so 0 is optimal)" : ""));
  }
  return out;
}

Outcome tree_theorem() {
  Outcome out;
  auto one = [&](const Graph &t, bool with_exact) {
    const TreePlan plan = recolor_tree(t);
    const int formula = t.order() - 2 - oracle::matching_number(t) + oracle::max_degree(t);
    std::ostringstream name;
    name << "tree n=" << t.order() << " edges";
    for (const auto &e : t.edges())
      name << ' ' << e.u << '-' << e.v;
    out.expect(plan.total() == formula, name.str() + ": plan " + str(plan.total()) + " formula " + str(formula));
    out.expect(sound(t, plan.recoloring()), name.str() + ": plan not properly connecting");
    if (with_exact) {
      const int exact = pc_opt_exact(t).value;
      out.expect(exact == formula, name.str() + ": exact " + str(exact) + " formula " + str(formula));
    }
  };
  for (int n = 2; n <= 7; ++n)
    enumerate_labeled_trees(n, [&](const Graph &t) { one(t, true); });
  Rng rng(3401);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.between(2, 9);
    one(random_tree(n, rng.next()), n <= 8);
  }
  return out;
}

Outcome complete_bipartite_theorem() {
  Outcome out;
  const int cases[3][3] = {{7, 2, 4}, {6, 3, 4}, {5, 4, 5}};
  for (const auto &c : cases) {
    const std::string name = "K_{" + str(c[1]) + "," + str(c[0]) + "}";
    const Graph g = complete_bipartite_graph(c[1], c[0]);
    const Certificate exact = pc_opt_exact(g);
    out.expect(exact.value == c[2], name + " exact: got " + str(exact.value) + ", expected " + str(c[2]));
    const Construction built = construct(g, ConstructClass::complete_bipartite);
    out.expect(built.method == "complete-bipartite" && built.certificate.value == c[2] && certified(g, built.certificate),
               name + " constructive: got " + str(built.certificate.value) + " via " + built.method);
  }
  const int prime[2][3] = {{7, 2, 2}, {5, 4, 3}};
  for (const auto &c : prime) {
    const std::string name = "K_{" + str(c[1]) + "," + str(c[0]) + "} prime";
    const Graph g = complete_bipartite_graph(c[1], c[0]);
    const Certificate exact = pc_opt_prime_exact(g);
    out.expect(exact.value == c[2], name + " exact: got " + str(exact.value) + ", expected " + str(c[2]));
    const Construction built = construct(g, ConstructClass::complete_bipartite, Variant::prime);
    out.expect(built.certificate.value == c[2] && certified(g, built.certificate),
               name + " constructive: got " + str(built.certificate.value));
  }
  return out;
}

Outcome good_edge_characterization() {
  Outcome out;
  for (int n = 3; n <= 6; ++n)
    enumerate_connected_graphs(n, [&](const Graph &g) {
      const bool good = find_good_edge(g).has_value();
      const auto witness = feasible(g, 1, 1);
      out.expect(good == witness.has_value(), "n=" + str(n) + " graph with " + str(static_cast<int>(g.edge_count())) +
                                                  " edges: good edge " + (good ? "yes" : "no") + ", (1,1) " +
                                                  (witness ? "yes" : "no"));
      if (witness)
        out.expect(sound(g, *witness), "(1,1) witness unsound");
    });
  return out;
}

Outcome alpha2_theorem() {
  Outcome out;
  auto one = [&](const Graph &g) {
    const Recoloring r = recolor_alpha2(g);
    const Recoloring rp = recolor_alpha2(g, Variant::prime);
    out.expect(r.cost() <= 3 && sound(g, r), "alpha2 n=" + str(g.order()) + ": cost " + str(r.cost()));
    out.expect(rp.p() <= 2 && sound(g, rp), "alpha2 prime n=" + str(g.order()) + ": p " + str(rp.p()));
  };
  for (int n = 2; n <= 6; ++n)
    enumerate_connected_graphs(n, [&](const Graph &g) {
      if (!oracle::has_independent_triple(g))
        one(g);
    });
  Rng rng(3101);
  for (int i = 0; i < 200; ++i)
    one(random_alpha2(rng.between(3, 10), rng));
  const int c5 = pc_opt_exact(cycle_graph(5)).value;
  out.expect(c5 == 3, "C_5 exact: got " + str(c5));
  return out;
}

Outcome optimal_feasibility() {
  Outcome out;
  const Graph k27 = complete_bipartite_graph(2, 7);
  const auto a = feasible(k27, 2, 2);
  out.expect(a && a->p() == 2 && a->q() == 2 && sound(k27, *a), "K_{2,7} (2,2) witness missing or unsound");
  const Graph k45 = complete_bipartite_graph(4, 5);
  const auto b = feasible(k45, 3, 2);
  out.expect(b && b->p() == 3 && b->q() == 2 && sound(k45, *b), "K_{4,5} (3,2) witness missing or unsound");
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= p && p + q <= 4; ++q)
      out.expect(!feasible(k45, p, q).has_value(), "K_{4,5} (" + str(p) + "," + str(q) + ") unexpectedly feasible");
  return out;
}

Outcome bound_sandwich() {
  Outcome out;
  Rng rng(3501);
  int done = 0;
  while (done < 100) {
    const int n = rng.between(3, 8);
    const Graph g = random_connected(n, 0.2 + 0.6 * rng.unit(), rng.next());
    if (oracle::complete(g))
      continue;
    ++done;
    const int lower = oracle::diameter(g) / 2 + 1;
    const int exact = pc_opt_exact(g).value;
    const Bounds b = bounds(g);
    out.expect(b.lower == lower, "bounds lower " + str(b.lower) + " vs diameter oracle " + str(lower));
    out.expect(lower <= exact && exact <= b.upper,
               "n=" + str(n) + ": " + str(lower) + " <= " + str(exact) + " <= " + str(b.upper) + " violated");
  }
  return out;
}

Outcome certificate_soundness() {
  Outcome out;
  Rng rng(3601);
  int invocations = 0;
  int attempts = 0;
  while (invocations < 1000 && attempts < 100000) {
    ++attempts;
    const int kind = invocations % 6;
    const Variant v = rng.chance(0.5) ? Variant::opt : Variant::prime;
    std::string name;
    Recoloring r;
    Graph g;
    if (kind == 0) {
      g = random_connected(rng.between(3, 8), 0.3 + 0.6 * rng.unit(), rng.next());
      if (!find_good_edge(g))
        continue;
      r = recolor_good_edge(g);
      name = "good-edge";
    } else if (kind == 1) {
      std::vector<int> parts(static_cast<std::size_t>(rng.between(4, 5)));
      for (auto &p : parts)
        p = rng.between(1, 2);
      g = relabel(complete_multipartite_graph(parts), random_permutation(
                                                          [&] {
                                                            int s = 0;
                                                            for (int p : parts)
                                                              s += p;
                                                            return s;
                                                          }(),
                                                          rng));
      r = recolor_spanning_bipartite(g);
      name = "spanning-bipartite";
    } else if (kind == 2) {
      g = random_alpha2(rng.between(3, 9), rng);
      r = recolor_alpha2(g, v);
      name = "alpha2";
    } else if (kind == 3) {
      const int n = rng.between(2, 5);
      const int m = rng.between(std::max(n, 9 - n), std::max(n, 9 - n) + 1);
      auto inst = recolor_complete_bipartite(m, n, v);
      g = inst.graph;
      r = inst.recoloring;
      name = "complete-bipartite";
    } else if (kind == 4) {
      g = random_tree(rng.between(2, 10), rng.next());
      r = recolor_tree(g, v).recoloring();
      name = "tree";
    } else {
      g = random_connected(rng.between(3, 7), 0.3 + 0.6 * rng.unit(), rng.next());
      const Construction built = construct(g, ConstructClass::automatic, v);
      out.expect(!certificate_failure(g, built.certificate).has_value(), "construct certificate rejected");
      r = built.certificate.witness ? *built.certificate.witness : Recoloring{};
      name = "construct:" + built.method;
    }
    ++invocations;
    out.expect(sound(g, r), name + " on n=" + str(g.order()) + " left a pair unconnected");
  }
  out.expect(invocations == 1000, "only " + str(invocations) + " constructive invocations");

  for (int i = 0; i < 500; ++i) {
    const Graph g = random_connected(rng.between(2, 8), 0.2 + 0.6 * rng.unit(), rng.next());
    std::vector<Color> col(g.edge_count());
    const int colors = rng.between(1, 4);
    for (auto &c : col)
      c = static_cast<Color>(rng.below(static_cast<std::uint64_t>(colors)));
    const EdgeColoring c(col);
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto reach = pc_walk_reachable(g, c, u);
      for (Vertex w = 0; w < g.order(); ++w)
        if (w != u && oracle::pc_path(g, c, u, w))
          out.expect(std::find(reach.begin(), reach.end(), w) != reach.end(), "walk filter missed a path target");
    }
  }
  return out;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 values table", values_table},
      {"AC2 tree theorem", tree_theorem},
      {"AC3 complete bipartite theorem", complete_bipartite_theorem},
      {"AC4 good-edge characterization", good_edge_characterization},
      {"AC5 alpha<=2 theorem", alpha2_theorem},
      {"AC6 optimal feasibility", optimal_feasibility},
      {"AC7 bound sandwich", bound_sandwich},
      {"AC8 certificate soundness", certificate_soundness},
  };
  int failed = 0;
  for (const auto &[name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::string crash;
    try {
      out = run();
    } catch (const std::exception &e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = crash.empty() && out.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << out.checks << " checks, " << out.failures.size()
              << " failed, " << static_cast<int>(secs * 1000) << " ms)";
    if (!crash.empty())
      std::cout << " exception: " << crash;
    for (std::size_t i = 0; i < out.failures.size() && i < 5; ++i)
      std::cout << "\n    " << out.failures[i];
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

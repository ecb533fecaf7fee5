#include "pcopt/tables.hpp"

#include "pcopt/check.hpp"
#include "pcopt/construct.hpp"
#include "pcopt/error.hpp"
#include "pcopt/generators.hpp"
#include "pcopt/properties.hpp"
#include "pcopt/search.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pcopt {

namespace {

int path_value(int n) { return (n - 1) / 2 + 1; }

struct Measured {
  int value;
  std::string method;
};

Measured construct_value(const Graph &g, Variant variant) {
  const Construction c = construct(g, ConstructClass::automatic, variant);
  return {c.certificate.value, c.method};
}

// A cycle contains its Hamiltonian path as a spanning subgraph, so the tree
// construction on that path recolors the cycle too.
Measured cycle_via_spanning_path(const Graph &cycle, Variant variant) {
  const Graph path = path_graph(cycle.order());
  const TreePlan plan = recolor_tree(path, variant);
  const Recoloring r = plan.recoloring();
  if (!is_properly_connected(cycle, apply_recoloring(cycle, r)).properly_connected)
    throw InternalError("tables: spanning path recoloring fails on the cycle");
  return {variant == Variant::opt ? r.cost() : r.p(), "spanning-path"};
}

TableRow make_row(std::string family, std::string params, const Graph &g, Variant variant, int expected,
                  bool via_spanning_path = false) {
  TableRow row;
  row.family = std::move(family);
  row.params = std::move(params);
  row.objective = variant == Variant::opt ? "opt" : "prime";
  const Measured built = via_spanning_path ? cycle_via_spanning_path(g, variant) : construct_value(g, variant);
  row.constructive = built.value;
  row.method = built.method;
  row.exact = (variant == Variant::opt ? pc_opt_exact(g) : pc_opt_prime_exact(g)).value;
  row.expected = expected;
  row.match = row.constructive == row.exact && row.exact == row.expected;
  return row;
}

} // namespace

std::vector<TableRow> known_value_rows() {
  std::vector<TableRow> rows;
  const int small_bipartite[][3] = {{2, 3, 3}, {3, 3, 3}, {3, 4, 4}, {4, 4, 4}};
  for (const auto &[a, b, value] : small_bipartite)
    rows.push_back(make_row("K_{a,b}", std::to_string(a) + " " + std::to_string(b),
                            complete_bipartite_graph(a, b), Variant::opt, value));

  for (int m = 2; m <= 5; ++m) {
    const Graph star = star_graph(m);
    rows.push_back(make_row("K_{1,m}", std::to_string(m), star, Variant::opt, 2 * m - 2));
    rows.push_back(make_row("K_{1,m}", std::to_string(m), star, Variant::prime, m - 1));
  }
  for (int n = 3; n <= 8; ++n) {
    const Graph path = path_graph(n);
    rows.push_back(make_row("P_n", std::to_string(n), path, Variant::opt, path_value(n)));
    rows.push_back(make_row("P_n", std::to_string(n), path, Variant::prime, n - 1 - n / 2));
  }
  for (int n = 3; n <= 8; ++n) {
    // C_3 is the triangle, which is complete and needs nothing.
    const int expected = n == 3 ? 0 : path_value(n);
    rows.push_back(make_row("C_n", std::to_string(n), cycle_graph(n), Variant::opt, expected, n > 3));
  }

  const int large_bipartite[][4] = {{7, 2, 4, 2}, {6, 3, 4, 2}, {5, 4, 5, 3}};
  for (const auto &[m, n, value, prime_value] : large_bipartite) {
    const Graph g = complete_bipartite_graph(m, n);
    const std::string params = std::to_string(m) + " " + std::to_string(n);
    rows.push_back(make_row("K_{m,n}", params, g, Variant::opt, value));
    rows.push_back(make_row("K_{m,n}", params, g, Variant::prime, prime_value));
  }

  const int blowup[] = {2, 2, 2, 2, 2};
  rows.push_back(make_row("clique_cycle_blowup", "2 2 2 2 2", clique_cycle_blowup(blowup), Variant::opt, 3));
  return rows;
}

std::string rows_to_csv(const std::vector<TableRow> &rows) {
  std::ostringstream out;
  out << "family,params,objective,method,constructive,exact,expected,match\n";
  for (const auto &r : rows)
    out << r.family << ',' << r.params << ',' << r.objective << ',' << r.method << ',' << r.constructive
        << ',' << r.exact << ',' << r.expected << ',' << (r.match ? "true" : "false") << '\n';
  return out.str();
}

std::string rows_to_text(const std::vector<TableRow> &rows) {
  std::ostringstream out;
  out << std::left << std::setw(20) << "family" << std::setw(11) << "params" << std::setw(7) << "obj"
      << std::setw(20) << "method" << std::right << std::setw(6) << "built" << std::setw(7) << "exact"
      << std::setw(7) << "known" << "  match\n";
  for (const auto &r : rows)
    out << std::left << std::setw(20) << r.family << std::setw(11) << r.params << std::setw(7) << r.objective
        << std::setw(20) << r.method << std::right << std::setw(6) << r.constructive << std::setw(7) << r.exact
        << std::setw(7) << r.expected << "  " << (r.match ? "yes" : "NO") << '\n';
  return out.str();
}

} // namespace pcopt

#include "oracles.hpp"
#include "pcopt/error.hpp"
#include "pcopt/generators.hpp"
#include "pcopt/properties.hpp"
#include "pcopt/spanning_trees.hpp"

#include <doctest.h>

#include <set>

using namespace pcopt;

TEST_CASE("spanning tree examples") {
  CHECK(spanning_trees(cycle_graph(4)).size() == 4);
  const Graph t = random_tree(8, 5);
  const auto only = spanning_trees(t);
  REQUIRE(only.size() == 1);
  CHECK(only.front() == t);
  CHECK(spanning_trees(complete_graph(4)).size() == 16);
  CHECK(spanning_trees(cycle_graph(8)).size() == 8);
}

TEST_CASE("Cayley counts for complete graphs") {
  for (int n = 2; n <= 7; ++n) {
    std::size_t cayley = 1;
    for (int i = 0; i < n - 2; ++i)
      cayley *= static_cast<std::size_t>(n);
    CHECK(for_each_spanning_tree(complete_graph(n), [](const Graph &) { return true; }) == cayley);
  }
}

TEST_CASE("count equals the Matrix-Tree determinant on random graphs") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Graph g = random_connected(3 + static_cast<int>(s % 5), 0.5, 100 + s);
    std::set<std::vector<Edge>> seen;
    for_each_spanning_tree(g, [&](const Graph &t) {
      CHECK(is_tree(t));
      CHECK(t.order() == g.order());
      for (const auto &e : t.edges())
        CHECK(g.adjacent(e.u, e.v));
      seen.insert(std::vector<Edge>(t.edges().begin(), t.edges().end()));
      return true;
    });
    CHECK(static_cast<std::int64_t>(seen.size()) == oracle::kirchhoff(g));
  }
}

TEST_CASE("cap raises a budget error with the partial count") {
  try {
    spanning_trees(complete_graph(6), 100);
    FAIL("expected BudgetError");
  } catch (const BudgetError &e) {
    REQUIRE(e.partial_count.has_value());
    CHECK(*e.partial_count == 100u);
  }
  CHECK_THROWS_AS(spanning_trees(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}})), PreconditionError);
}

#pragma once

#include "pcopt/coloring.hpp"
#include "pcopt/graph.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace pcopt {

struct SearchBudget {
  // Largest total cost (or, for the prime objective, edge count) tried.
  // Negative means 2n, which covers every non-complete connected graph.
  int max_total_cost = -1;
  std::uint64_t max_candidates = std::numeric_limits<std::uint64_t>::max();
  std::optional<double> time_limit_seconds;

  int cost_cap(const Graph &g) const { return max_total_cost < 0 ? 2 * g.order() : max_total_cost; }
};

enum class Objective { total, prime };

enum class LowerBoundProof { exhausted_below, diameter_bound, formula, none };

std::string_view to_string(LowerBoundProof proof);
LowerBoundProof parse_lower_bound_proof(std::string_view text);
std::string_view to_string(Objective objective);

struct Certificate {
  Objective objective = Objective::total;
  int value = 0;
  std::optional<Recoloring> witness; // absent only for value 0
  std::string evidence = "exhaustive"; // "exhaustive" or "theorem:<name>"
  LowerBoundProof lower_bound_proof = LowerBoundProof::exhausted_below;

  // Whether the value is claimed optimal rather than just achievable.
  bool exact() const { return lower_bound_proof != LowerBoundProof::none; }
};

// Visits one recoloring per class under permutation of the q new colors:
// p-subsets of edges in lexicographic id order, each labelled by a
// restricted-growth string with exactly q blocks (color k+1 first appears
// after color k). The visitor returns false to stop. Returns the number of
// recolorings visited; q > p (or p > |E|) yields nothing and (0,0) yields
// the empty recoloring once.
std::size_t enumerate_recolorings(const Graph &g, int p, int q,
                                  const std::function<bool(const Recoloring &)> &visit);

// Minimum p + q by iterative deepening on t = p + q, q ascending within t.
Certificate pc_opt_exact(const Graph &g, const SearchBudget &budget = {});

// Minimum p alone: deepening on p, q = 1..p inside.
Certificate pc_opt_prime_exact(const Graph &g, const SearchBudget &budget = {});

enum class Semantics { exact, at_most };

// exact: recolor exactly p edges with exactly q distinct new colors.
// at_most: some p' <= p, q' <= q. (0,0) succeeds iff g is complete.
std::optional<Recoloring> feasible(const Graph &g, int p, int q, Semantics semantics = Semantics::exact,
                                   const SearchBudget &budget = {});

// Re-checks a certificate against g: the witness must make g properly
// connected and its cost must equal the claimed value. Returns a failure
// description, or nullopt when the certificate holds.
std::optional<std::string> certificate_failure(const Graph &g, const Certificate &cert);

} // namespace pcopt

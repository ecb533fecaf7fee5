#include "pcopt/search.hpp"

#include "pcopt/check.hpp"
#include "pcopt/error.hpp"
#include "pcopt/matching.hpp"
#include "pcopt/properties.hpp"

#include <chrono>
#include <numeric>
#include <vector>

namespace pcopt {

std::string_view to_string(LowerBoundProof proof) {
  switch (proof) {
  case LowerBoundProof::exhausted_below:
    return "exhausted-below";
  case LowerBoundProof::diameter_bound:
    return "diameter-bound";
  case LowerBoundProof::formula:
    return "formula";
  case LowerBoundProof::none:
    return "none";
  }
  return "none";
}

LowerBoundProof parse_lower_bound_proof(std::string_view text) {
  for (auto proof : {LowerBoundProof::exhausted_below, LowerBoundProof::diameter_bound,
                     LowerBoundProof::formula, LowerBoundProof::none})
    if (to_string(proof) == text)
      return proof;
  throw ParseError("unknown lower bound proof tag '" + std::string(text) + "'");
}

std::string_view to_string(Objective objective) {
  return objective == Objective::total ? "total" : "prime";
}

namespace {

// Calls f(edge_ids, colors) for every canonical (p, q) candidate; f returns
// false to stop. Returns false iff stopped.
template <typename F>
bool for_each_candidate(std::size_t edge_count, int p, int q, F &&f) {
  if (p < 0 || q < 0 || q > p || (q == 0 && p > 0) || static_cast<std::size_t>(p) > edge_count)
    return true;
  const auto up = static_cast<std::size_t>(p);
  std::vector<EdgeId> combo(up);
  std::iota(combo.begin(), combo.end(), EdgeId{0});
  std::vector<Color> labels(up, 0);

  auto label = [&](auto &&self, std::size_t pos, int blocks) -> bool {
    if (pos == up)
      return blocks != q || f(std::as_const(combo), std::as_const(labels));
    const int remaining = p - static_cast<int>(pos) - 1;
    for (int col = 1; col <= std::min(blocks + 1, q); ++col) {
      const int next_blocks = std::max(blocks, col);
      if (q - next_blocks > remaining)
        continue;
      labels[pos] = col;
      if (!self(self, pos + 1, next_blocks))
        return false;
    }
    return true;
  };

  while (true) {
    if (!label(label, 0, 0))
      return false;
    std::size_t i = up;
    while (i > 0 && combo[i - 1] == edge_count - up + (i - 1))
      --i;
    if (i == 0)
      return true;
    ++combo[i - 1];
    for (std::size_t j = i; j < up; ++j)
      combo[j] = combo[j - 1] + 1;
  }
}

Recoloring to_recoloring(const Graph &g, const std::vector<EdgeId> &ids, const std::vector<Color> &colors) {
  std::vector<Assignment> out;
  out.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    out.push_back({g.edge(ids[i]), colors[i]});
  return Recoloring(std::move(out));
}

// n - 2 - matching + max degree (or n - 1 - matching for the prime objective)
// of a BFS spanning tree: an achievable cost reported with budget errors.
int bfs_tree_upper_bound(const Graph &g, Objective objective) {
  std::vector<Edge> tree;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex y : g.neighbors(queue[head]))
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        tree.push_back(make_edge(queue[head], y));
        queue.push_back(y);
      }
  const Graph t(g.order(), tree);
  const int n = g.order();
  const int matched = static_cast<int>(forest_maximum_matching(t).size());
  return objective == Objective::total ? n - 2 - matched + max_degree(t) : n - 1 - matched;
}

class CandidateSearch {
public:
  CandidateSearch(const Graph &g, const SearchBudget &budget, Objective objective)
      : g_(g), budget_(budget), objective_(objective), coloring_(EdgeColoring::monochromatic(g)),
        start_(std::chrono::steady_clock::now()) {}

  std::optional<Recoloring> try_split(int p, int q) {
    std::optional<Recoloring> found;
    for_each_candidate(g_.edge_count(), p, q, [&](const std::vector<EdgeId> &ids, const std::vector<Color> &colors) {
      charge();
      for (std::size_t i = 0; i < ids.size(); ++i)
        coloring_[ids[i]] = colors[i];
      const bool ok = is_properly_connected(g_, coloring_).properly_connected;
      for (EdgeId id : ids)
        coloring_[id] = base_color;
      if (ok)
        found = to_recoloring(g_, ids, colors);
      return !ok;
    });
    return found;
  }

  [[noreturn]] void exhausted(const std::string &why) const {
    throw BudgetError(why, bfs_tree_upper_bound(g_, objective_));
  }

private:
  void charge() {
    if (++candidates_ > budget_.max_candidates)
      exhausted("search budget exceeded: more than " + std::to_string(budget_.max_candidates) +
                " candidate recolorings");
    if (budget_.time_limit_seconds && candidates_ % 256 == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > *budget_.time_limit_seconds)
        exhausted("search budget exceeded: time limit reached");
    }
  }

  const Graph &g_;
  const SearchBudget &budget_;
  Objective objective_;
  EdgeColoring coloring_;
  std::uint64_t candidates_ = 0;
  std::chrono::steady_clock::time_point start_;
};

void require_connected(const Graph &g, std::string_view what) {
  if (!is_connected(g))
    throw PreconditionError(std::string(what) + ": graph is disconnected");
}

} // namespace

std::size_t enumerate_recolorings(const Graph &g, int p, int q,
                                  const std::function<bool(const Recoloring &)> &visit) {
  std::size_t count = 0;
  for_each_candidate(g.edge_count(), p, q, [&](const std::vector<EdgeId> &ids, const std::vector<Color> &colors) {
    ++count;
    return visit(to_recoloring(g, ids, colors));
  });
  return count;
}

Certificate pc_opt_exact(const Graph &g, const SearchBudget &budget) {
  require_connected(g, "pc_opt_exact");
  Certificate cert;
  if (is_complete(g))
    return cert;
  const int cap = budget.cost_cap(g);
  CandidateSearch search(g, budget, Objective::total);
  for (int t = 2; t <= cap; ++t)
    for (int q = 1; q <= t / 2; ++q)
      if (auto hit = search.try_split(t - q, q)) {
        cert.value = t;
        cert.witness = std::move(hit);
        return cert;
      }
  search.exhausted("search budget exceeded: no recoloring of total cost <= " + std::to_string(cap));
}

Certificate pc_opt_prime_exact(const Graph &g, const SearchBudget &budget) {
  require_connected(g, "pc_opt_prime_exact");
  Certificate cert;
  cert.objective = Objective::prime;
  if (is_complete(g))
    return cert;
  const int cap = budget.cost_cap(g);
  CandidateSearch search(g, budget, Objective::prime);
  for (int p = 1; p <= cap; ++p)
    for (int q = 1; q <= p; ++q)
      if (auto hit = search.try_split(p, q)) {
        cert.value = p;
        cert.witness = std::move(hit);
        return cert;
      }
  search.exhausted("search budget exceeded: no recoloring of at most " + std::to_string(cap) +
                   " edges");
}

std::optional<Recoloring> feasible(const Graph &g, int p, int q, Semantics semantics,
                                   const SearchBudget &budget) {
  require_connected(g, "feasible");
  if (p < 0 || q < 0)
    throw PreconditionError("feasible: p and q must be non-negative");
  CandidateSearch search(g, budget, Objective::total);
  auto exactly = [&](int pp, int qq) -> std::optional<Recoloring> {
    if (pp == 0 && qq == 0)
      return is_complete(g) ? std::optional<Recoloring>(Recoloring{}) : std::nullopt;
    return search.try_split(pp, qq);
  };
  if (semantics == Semantics::exact)
    return exactly(p, q);
  for (int pp = 0; pp <= p; ++pp)
    for (int qq = 0; qq <= std::min(pp, q); ++qq) {
      if ((pp == 0) != (qq == 0))
        continue;
      if (auto hit = exactly(pp, qq))
        return hit;
    }
  return std::nullopt;
}

std::optional<std::string> certificate_failure(const Graph &g, const Certificate &cert) {
  if (!cert.witness) {
    if (cert.value != 0)
      return "certificate has no witness but claims value " + std::to_string(cert.value);
    const auto report = is_properly_connected(g, EdgeColoring::monochromatic(g));
    if (!report.properly_connected)
      return std::string("value 0 claimed but the monochromatic graph is not properly connected");
    return std::nullopt;
  }
  const Recoloring &r = *cert.witness;
  const int cost = cert.objective == Objective::total ? r.cost() : r.p();
  if (cost != cert.value)
    return "witness cost " + std::to_string(cost) + " differs from claimed value " +
           std::to_string(cert.value);
  EdgeColoring c;
  try {
    c = apply_recoloring(g, r);
  } catch (const PreconditionError &e) {
    return std::string(e.what());
  }
  const auto report = is_properly_connected(g, c);
  if (!report.properly_connected)
    return "witness leaves pair (" + std::to_string(report.violating_pair->first) + "," +
           std::to_string(report.violating_pair->second) + ") without a properly colored path";
  return std::nullopt;
}

} // namespace pcopt

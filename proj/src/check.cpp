#include "pcopt/check.hpp"

#include "pcopt/error.hpp"
#include "pcopt/properties.hpp"

#include <deque>
#include <string>

namespace pcopt {

namespace {

constexpr Color no_color = -1;

void require_fits(const Graph &g, const EdgeColoring &c) {
  if (!c.fits(g))
    throw PreconditionError("edge coloring does not match the graph's edge set");
}

// Arc 2e is edge e traversed from its smaller endpoint, 2e+1 the reverse.
class WalkSearch {
public:
  WalkSearch(const Graph &g, const EdgeColoring &c)
      : g_(g), c_(c), seen_arc_(2 * g.edge_count(), 0) {}

  // Is `target` the head of some properly colored walk that starts at `from`
  // (having arrived with color `last`) and never enters a blocked vertex?
  bool reaches(Vertex from, Color last, Vertex target, const std::vector<char> &blocked) {
    bool found = false;
    run(from, last, blocked, [&](Vertex head) {
      found = head == target;
      return !found;
    });
    return found;
  }

  // Marks every vertex that heads some arc of a walk from `from`.
  std::vector<char> reachable(Vertex from) {
    std::vector<char> hit(static_cast<std::size_t>(g_.order()), 0);
    const std::vector<char> none(static_cast<std::size_t>(g_.order()), 0);
    run(from, no_color, none, [&](Vertex head) {
      hit[static_cast<std::size_t>(head)] = 1;
      return true;
    });
    return hit;
  }

private:
  template <typename OnHead>
  void run(Vertex from, Color last, const std::vector<char> &blocked, OnHead &&on_head) {
    ++epoch_;
    if (epoch_ == 0) {
      std::fill(seen_arc_.begin(), seen_arc_.end(), 0);
      epoch_ = 1;
    }
    queue_.clear();
    auto push_out = [&](Vertex x, Color incoming) {
      for (Vertex y : g_.neighbors(x)) {
        if (blocked[static_cast<std::size_t>(y)])
          continue;
        const EdgeId e = g_.edge_id(x, y);
        if (c_[e] == incoming)
          continue;
        const std::size_t arc = 2 * e + (x < y ? 0 : 1);
        if (seen_arc_[arc] == epoch_)
          continue;
        seen_arc_[arc] = epoch_;
        queue_.push_back(arc);
      }
    };
    push_out(from, last);
    while (!queue_.empty()) {
      const std::size_t arc = queue_.front();
      queue_.pop_front();
      const Edge &e = g_.edge(arc / 2);
      const Vertex head = arc % 2 == 0 ? e.v : e.u;
      if (!on_head(head))
        return;
      push_out(head, c_[arc / 2]);
    }
  }

  const Graph &g_;
  const EdgeColoring &c_;
  std::vector<unsigned> seen_arc_;
  unsigned epoch_ = 0;
  std::deque<std::size_t> queue_;
};

class PathSearch {
public:
  PathSearch(const Graph &g, const EdgeColoring &c)
      : g_(g), c_(c), walks_(g, c), on_path_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<Path> find(Vertex u, Vertex v) {
    target_ = v;
    path_.assign(1, u);
    std::fill(on_path_.begin(), on_path_.end(), 0);
    on_path_[static_cast<std::size_t>(u)] = 1;
    if (!walks_.reaches(u, no_color, v, on_path_) || !extend(u, no_color))
      return std::nullopt;
    return path_;
  }

  WalkSearch &walks() { return walks_; }

private:
  bool extend(Vertex x, Color last) {
    for (Vertex y : g_.neighbors(x)) {
      if (on_path_[static_cast<std::size_t>(y)])
        continue;
      const Color col = c_[g_.edge_id(x, y)];
      if (col == last)
        continue;
      path_.push_back(y);
      if (y == target_)
        return true;
      on_path_[static_cast<std::size_t>(y)] = 1;
      if (walks_.reaches(y, col, target_, on_path_) && extend(y, col))
        return true;
      on_path_[static_cast<std::size_t>(y)] = 0;
      path_.pop_back();
    }
    return false;
  }

  const Graph &g_;
  const EdgeColoring &c_;
  WalkSearch walks_;
  std::vector<char> on_path_;
  Path path_;
  Vertex target_ = 0;
};

} // namespace

std::optional<Path> exists_pc_path(const Graph &g, const EdgeColoring &c, Vertex u, Vertex v) {
  require_fits(g, c);
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
    throw PreconditionError("exists_pc_path: need two distinct vertices of the graph");
  return PathSearch(g, c).find(u, v);
}

std::vector<Vertex> pc_walk_reachable(const Graph &g, const EdgeColoring &c, Vertex u) {
  require_fits(g, c);
  if (!g.has_vertex(u))
    throw PreconditionError("pc_walk_reachable: vertex out of range");
  const auto hit = WalkSearch(g, c).reachable(u);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[static_cast<std::size_t>(v)])
      out.push_back(v);
  return out;
}

ConnectivityReport is_properly_connected(const Graph &g, const EdgeColoring &c, bool collect_paths) {
  require_fits(g, c);
  ConnectivityReport report;
  if (collect_paths)
    report.witness_paths.emplace();

  const auto comps = components(g);
  if (comps.size() > 1) {
    // Pairs (0, v) come first, so the least cross pair uses the least vertex
    // outside 0's component.
    std::vector<bool> with_zero(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : comps.front())
      with_zero[static_cast<std::size_t>(v)] = true;
    Vertex other = 0;
    while (with_zero[static_cast<std::size_t>(other)])
      ++other;
    report.violating_pair = VertexPair{0, other};
    report.checked_pairs = 1;
    report.witness_paths.reset();
    return report;
  }

  PathSearch search(g, c);
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto walk_hit = search.walks().reachable(u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      ++report.checked_pairs;
      std::optional<Path> path;
      if (walk_hit[static_cast<std::size_t>(v)])
        path = search.find(u, v);
      if (!path) {
        report.violating_pair = VertexPair{u, v};
        report.witness_paths.reset();
        return report;
      }
      if (collect_paths)
        report.witness_paths->emplace(VertexPair{u, v}, std::move(*path));
    }
  }
  report.properly_connected = true;
  return report;
}

ProperColoringReport is_properly_colored(const Graph &g, const EdgeColoring &c) {
  require_fits(g, c);
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto nbrs = g.neighbors(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const EdgeId a = g.edge_id(x, nbrs[i]);
        const EdgeId b = g.edge_id(x, nbrs[j]);
        if (c[a] == c[b])
          return {false, std::pair{g.edge(a), g.edge(b)}};
      }
  }
  return {};
}

bool is_properly_colored_path(const Graph &g, const EdgeColoring &c, const Path &path) {
  if (path.size() < 2)
    return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  Color last = no_color;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex x = path[i];
    if (!g.has_vertex(x) || seen[static_cast<std::size_t>(x)])
      return false;
    seen[static_cast<std::size_t>(x)] = true;
    if (i == 0)
      continue;
    const auto id = g.edge_index(path[i - 1], x);
    if (!id || c[*id] == last)
      return false;
    last = c[*id];
  }
  return true;
}

} // namespace pcopt

#include "pcopt/coloring.hpp"

#include "pcopt/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace pcopt {

bool EdgeColoring::fits(const Graph &g) const {
  return colors_.size() == g.edge_count() &&
         std::all_of(colors_.begin(), colors_.end(), [](Color c) { return c >= 0; });
}

Recoloring::Recoloring(std::vector<Assignment> assignments) : assignments_(std::move(assignments)) {
  for (auto &a : assignments_) {
    a.edge = make_edge(a.edge.u, a.edge.v);
    if (a.color < 1)
      throw PreconditionError("recoloring: color " + std::to_string(a.color) +
                              " is not a new color (must be >= 1)");
  }
  std::sort(assignments_.begin(), assignments_.end());
  for (std::size_t i = 1; i < assignments_.size(); ++i)
    if (assignments_[i].edge == assignments_[i - 1].edge)
      throw PreconditionError("recoloring: edge (" + std::to_string(assignments_[i].edge.u) + "," +
                              std::to_string(assignments_[i].edge.v) + ") assigned twice");
}

int Recoloring::q() const {
  std::set<Color> used;
  for (const auto &a : assignments_)
    used.insert(a.color);
  return static_cast<int>(used.size());
}

EdgeColoring apply_recoloring(const Graph &g, const Recoloring &r) {
  auto c = EdgeColoring::monochromatic(g);
  for (const auto &a : r.assignments()) {
    const auto id = g.has_vertex(a.edge.u) && g.has_vertex(a.edge.v)
                        ? g.edge_index(a.edge.u, a.edge.v)
                        : std::nullopt;
    if (!id)
      throw PreconditionError("apply_recoloring: (" + std::to_string(a.edge.u) + "," +
                              std::to_string(a.edge.v) + ") is not an edge of the graph");
    c[*id] = a.color;
  }
  return c;
}

Recoloring recoloring_from(const Graph &g, const EdgeColoring &c) {
  std::vector<Assignment> out;
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (c[id] != base_color)
      out.push_back({g.edge(id), c[id]});
  return Recoloring(std::move(out));
}

} // namespace pcopt

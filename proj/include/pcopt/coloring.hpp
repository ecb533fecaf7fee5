#pragma once

#include "pcopt/graph.hpp"

#include <span>
#include <vector>

namespace pcopt {

using Color = int;

// The single color of the initial monochromatic graph.
inline constexpr Color base_color = 0;

// Total map from the edges of a host graph to colors, indexed by edge id.
class EdgeColoring {
public:
  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  static EdgeColoring monochromatic(const Graph &g) {
    return EdgeColoring(std::vector<Color>(g.edge_count(), base_color));
  }

  Color operator[](EdgeId id) const { return colors_[id]; }
  Color &operator[](EdgeId id) { return colors_[id]; }
  std::size_t size() const { return colors_.size(); }
  std::span<const Color> colors() const { return colors_; }

  // True when this coloring has exactly one non-negative entry per edge of g.
  bool fits(const Graph &g) const;

  friend bool operator==(const EdgeColoring &, const EdgeColoring &) = default;

private:
  std::vector<Color> colors_;
};

struct Assignment {
  Edge edge;
  Color color = 1;

  friend auto operator<=>(const Assignment &, const Assignment &) = default;
};

// A set of (edge, new color) pairs. Edges are distinct and colors are >= 1;
// p counts edges and q counts distinct colors.
class Recoloring {
public:
  Recoloring() = default;
  // Throws PreconditionError on a repeated edge or a color below 1.
  explicit Recoloring(std::vector<Assignment> assignments);

  std::span<const Assignment> assignments() const { return assignments_; }
  bool empty() const { return assignments_.empty(); }
  int p() const { return static_cast<int>(assignments_.size()); }
  int q() const;
  int cost() const { return p() + q(); }

  friend bool operator==(const Recoloring &, const Recoloring &) = default;

private:
  std::vector<Assignment> assignments_; // sorted by edge
};

// Assigned edges take their new color, all others keep color 0. Throws
// PreconditionError if an assigned pair is not an edge of g.
EdgeColoring apply_recoloring(const Graph &g, const Recoloring &r);

// The recoloring that turns the monochromatic g into c (edges with color > 0).
Recoloring recoloring_from(const Graph &g, const EdgeColoring &c);

} // namespace pcopt

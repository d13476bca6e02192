#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffcolor/graph.hpp"

namespace diffcolor {

/// Injective assignment vertex -> color in {1..k*n}. k is the color range
/// multiplier; k=1 is the classical differential coloring setting.
struct Coloring {
  int k = 1;
  std::vector<int> colors;  // colors[v], 1-based

  int n() const { return static_cast<int>(colors.size()); }
  int range() const { return k * n(); }
  int color(int v) const { return colors[v]; }
};

/// Sequence of disjoint vertex sets covering V; set S_i takes the contiguous
/// color block after S_1..S_{i-1}, ascending vertex index within a set.
struct OrderedPartition {
  std::vector<std::vector<int>> sets;
};

/// nullopt if c is a valid coloring for g, otherwise a message naming the
/// offending vertices (duplicate color, out-of-range color, size mismatch).
std::optional<std::string> coloring_error(const Graph& g, const Coloring& c);

/// Minimum |c(u) - c(v)| over the edges of g. Edgeless graphs report the
/// sentinel k*n ("no edge constrains the coloring"). Throws
/// std::invalid_argument when the coloring is invalid.
int min_color_distance(const Graph& g, const Coloring& c);

/// Ordered coloring implied by p; colors occupy 1..n, k is recorded.
Coloring ordered_coloring(const Graph& g, const OrderedPartition& p, int k = 1);

/// Vertex i gets color k*(i+1); min color distance >= k on every graph.
Coloring trivial_coloring(const Graph& g, int k);

/// floor(n/2) + (k-1)n, the largest possible k-differential chromatic number
/// of a connected graph on n >= 2 vertices.
int upper_bound(int n, int k);

/// floor((k-1)n/(m-1)) + 1, attained by any proper m-coloring (m >= 2).
int mcolorable_lower_bound(int n, int k, int m);

/// Spreads the classes of a proper m-coloring over 1..kn, separating
/// consecutive class blocks by floor((k-1)n/(m-1)); resulting min distance is
/// at least mcolorable_lower_bound(n,k,m). Classes must be non-empty, proper
/// and cover V.
Coloring coloring_from_proper(const Graph& g, const std::vector<std::vector<int>>& classes,
                              int k);

}  // namespace diffcolor

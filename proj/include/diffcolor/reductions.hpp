#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diffcolor/coloring.hpp"
#include "diffcolor/graph.hpp"

namespace diffcolor {

enum class ReductionKind { join, path_attach };

/// A hardness-reduction gadget instance: the source graph, the constructed
/// target, and the bookkeeping that ties them together. vertex_map is the
/// identity on 0..n-1 (gadget vertices are appended after the source).
struct ReductionInstance {
  Graph source;
  Graph target;
  ReductionKind kind = ReductionKind::join;
  int k = 2;  // join: target tests (k+1, k*n_target)-colorability

  std::vector<int> vertex_map;                    // source vertex -> target vertex
  std::vector<int> gadget_vertices;               // join: the clique, in color-assignment order
  std::vector<std::pair<int, int>> pendant_paths;  // path_attach: (v1, v2) per source vertex

  /// "join_3_2n" (k=2), "join_kplus1_kn" (k>2) or "path_attach_planar".
  std::string kind_name() const;
};

/// Join g with K_{(k-1)n}: g is (k+1, n)-differential colorable iff the
/// target is (k+1, k*n_target)-colorable. k >= 2; k=2 is the (3,2n) case.
ReductionInstance reduce_join(const Graph& g, int k);

/// Forward direction of the join reduction: source keeps its colors in 1..n,
/// the i-th clique vertex gets n + (k+1)*i. The input must verify distance
/// >= k+1 with colors inside 1..n on the source; the output verifies
/// distance >= k+1 over 1..k*n_target.
Coloring lift_join_coloring(const ReductionInstance& inst, const Coloring& l);

/// Backward direction: block-swaps maximal clique-color runs past source
/// runs (with a global reversal when every source color exceeds every clique
/// color) until the source occupies exactly 1..n, then restricts. Distance
/// >= k+1 is re-verified after every swap.
Coloring normalize_join_coloring(const ReductionInstance& inst, Coloring l);

/// Attach a pendant path v -> v1 -> v2 to every vertex: 3-colorability of g
/// becomes (floor(2n'/3), 2n')-colorability of the 3n-vertex target.
ReductionInstance reduce_path_attach(const Graph& g);

/// Forward direction of the path reduction: the seven block assignment rules
/// mapping a proper 3-coloring of the source to a target coloring with
/// distance >= 2n = floor(2n'/3) over colors 1..2n'.
Coloring lift_3coloring(const ReductionInstance& inst,
                        const std::vector<std::vector<int>>& classes);

/// Backward direction: target vertex u gets class i when its color lies in
/// the i-th block of width 2n; properness of the result is guaranteed by the
/// distance precondition. Restriction to 0..n-1 3-colors the source.
std::vector<std::vector<int>> extract_3coloring(const ReductionInstance& inst,
                                                const Coloring& l);

}  // namespace diffcolor

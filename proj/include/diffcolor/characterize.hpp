#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diffcolor/coloring.hpp"
#include "diffcolor/graph.hpp"

namespace diffcolor {

/// Outcome of a polynomial-time (2,n)-differential colorability check.
/// Colorable results carry a coloring that the verifier confirms at distance
/// >= 2 (colors a permutation of 1..n); rejections carry the forbidden
/// subgraph witness. case_trace records which proof cases fired, e.g.
/// "Lemma8/Case1" or "Thm10/Case4/K22/w-eq-c".
struct CharacterizationResult {
  bool colorable = false;
  std::optional<Coloring> coloring;
  ForbiddenReport witness;
  std::vector<std::string> case_trace;
};

/// Proper color classes plus the trace of balancing moves that produced them.
struct BalancedClasses {
  std::vector<std::vector<int>> classes;
  std::vector<std::string> trace;
};

/// Bipartite graphs admit a (2,n)-differential coloring iff they are not
/// complete bipartite. sides must be a valid bipartition of g.
CharacterizationResult characterize_bipartite(const Graph& g,
                                              const std::vector<int>& side1,
                                              const std::vector<int>& side2);

/// Turns any proper 3-coloring of an outerplanar graph (n >= 6, no
/// K_{1,n-1}) into one where every class has >= 2 vertices.
BalancedClasses balance_outerplanar(const Graph& g, std::vector<std::vector<int>> classes);

/// Turns any proper 4-coloring of a planar graph (n >= 36, none of
/// K_{1,1,n-3} / K_{1,n-1} / K_{2,n-2}) into one where, sorted by size, the
/// two smallest classes have >= 2 and the two largest >= 5 vertices.
BalancedClasses balance_planar(const Graph& g, std::vector<std::vector<int>> classes);

/// Outerplanar graphs with n >= 8 admit a (2,n)-differential coloring iff
/// they do not contain K_{1,n-1}.
CharacterizationResult characterize_outerplanar(const Graph& g);

/// Planar graphs with n >= 36 admit a (2,n)-differential coloring iff they
/// contain none of K_{1,1,n-3}, K_{1,n-1}, K_{2,n-2}.
CharacterizationResult characterize_planar(const Graph& g);

/// Proper 3-coloring of a 2-degenerate graph by smallest-last greedy; throws
/// ClassViolationError if the graph is not 2-degenerate (so not outerplanar).
std::vector<std::vector<int>> greedy_3color_2degenerate(const Graph& g);

/// The ordering steps of the outerplanar / planar theorems, exposed for
/// direct testing of every proof case: given balanced classes (sizes as
/// guaranteed by the balance_* routines) they emit the ordered-coloring
/// sequence and the case labels. Sizes outside the balanced range throw.
struct SequencePlan {
  OrderedPartition sequence;
  std::vector<std::string> trace;
};
SequencePlan outerplanar_sequence_from_classes(const Graph& g,
                                               std::vector<std::vector<int>> classes);
SequencePlan planar_sequence_from_classes(const Graph& g,
                                          std::vector<std::vector<int>> classes);

}  // namespace diffcolor

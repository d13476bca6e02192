#pragma once

#include <string>
#include <vector>

#include "diffcolor/graph.hpp"

namespace diffcolor {

/// One |x_i - x_j| >= Z constraint instance; expands to the two linear rows
///   x_i - x_j + M*b >= Z   and   -x_i + x_j + M*(1-b) >= Z
/// with its own binary selector. Z is 1 (distinctness) or OPT (edge rows).
struct IlpRow {
  int i = 0, j = 0;       // 0-based vertex indices
  bool uses_opt = false;  // Z = OPT instead of Z = 1
  int binary = 0;         // 1-based index of the selector variable
};

/// The maximum differential coloring ILP over the augmented graph
/// (original plus (k-1)n isolated vertices, so colors run 1..var_count and
/// the 1-differential optimum of the augmentation equals the k-differential
/// optimum of the original). big_M is fixed to 2 * var_count.
struct IlpModel {
  int original_n = 0;
  int k = 1;
  int var_count = 0;  // n + (k-1)n = kn color variables
  int big_m = 0;      // 2 * var_count
  std::vector<Edge> edges;  // edge rows (between original vertices only)
  std::vector<IlpRow> rows;
  bool deduped = false;  // distinctness rows for edge pairs dropped
};

/// Build the model; with dedupe_distinctness the distinctness row of a pair
/// that also has an edge row is dropped (subsumed since OPT >= 1).
IlpModel build_model(const Graph& g, int k, bool dedupe_distinctness = false);

/// Deterministic CPLEX-dialect LP text; byte-stable for identical input.
std::string emit_lp(const IlpModel& m);

/// Detail of a validate_model run, convertible to its boolean verdict.
struct ModelValidation {
  bool ok = false;
  int exact_optimum = 0;       // k_diff_chromatic on the original graph
  int model_optimum = 0;       // 1-differential optimum of the augmentation
  std::string detail;          // set when a check fails
  explicit operator bool() const { return ok; }
};

/// Cross-validates the model against the exact module (n <= 8):
///  - the augmented-graph route must reproduce k_diff_chromatic(g, k);
///  - an independent bounded enumeration over injective assignments must
///    agree (n <= 6);
///  - a witness assignment extended over the isolated vertices must satisfy
///    every emitted row with OPT = optimum, and no binary choice may satisfy
///    an edge row pair at OPT = optimum + 1 on a witnessed tight edge.
ModelValidation validate_model(const Graph& g, int k);

/// True when assignment x (1-based colors per augmented vertex) satisfies
/// every row of m at the given OPT with best-choice binaries.
bool rows_satisfied(const IlpModel& m, const std::vector<int>& x, int opt);

}  // namespace diffcolor

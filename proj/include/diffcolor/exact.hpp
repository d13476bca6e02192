#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "diffcolor/coloring.hpp"
#include "diffcolor/graph.hpp"

namespace diffcolor {

inline constexpr long long kDefaultNodeBudget = 10'000'000;
inline constexpr int kHamiltonianMaxN = 24;

enum class SolveOutcome { feasible, infeasible, timeout };

std::string to_string(SolveOutcome o);

/// Result of an exact decision / optimization run. A feasible report embeds a
/// coloring that verifies at the queried distance; a timeout report never
/// claims infeasibility.
struct SolveReport {
  SolveOutcome outcome = SolveOutcome::infeasible;
  std::optional<Coloring> coloring;
  std::optional<int> optimum_d;          // set by k_diff_chromatic
  std::optional<std::pair<int, int>> searched;  // [known-feasible, unresolved-hi] on timeout
  long long nodes_explored = 0;
  std::chrono::duration<double> wall_time{0};
};

/// Hamiltonian path via DP over vertex subsets, O(2^n * n^2); n <= 24.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g);

/// (2,n)-colorability through the complement's Hamiltonian path: position i
/// on the path becomes color i. nullopt means no (2,n)-differential coloring
/// exists. n <= 24.
std::optional<Coloring> decide_2n(const Graph& g);

/// Backtracking decision: does an injective coloring into 1..kn with every
/// edge distance >= d exist? Vertices in descending-degree order; the first
/// vertex is restricted to colors <= ceil(kn/2) (color-reversal symmetry).
SolveReport feasible(const Graph& g, int d, int k, long long node_budget = kDefaultNodeBudget);

/// Largest d with feasible(g,d,k), found by binary search over
/// [k, floor(n/2)+(k-1)n] (Lemmas 1-2 bracket the optimum for connected g).
/// On budget exhaustion reports timeout with the searched interval and the
/// best coloring found so far.
SolveReport k_diff_chromatic(const Graph& g, int k, long long node_budget = kDefaultNodeBudget);

/// Exact proper m-coloring by DSATUR-ordered backtracking; classes are
/// returned by color index (some may be empty), or nullopt if none exists.
std::optional<std::vector<std::vector<int>>> proper_coloring(
    const Graph& g, int m, long long node_budget = kDefaultNodeBudget);

/// Smallest m <= n with a proper m-coloring (chromatic number).
int chromatic_number(const Graph& g, long long node_budget = kDefaultNodeBudget);

}  // namespace diffcolor

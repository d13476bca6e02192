#pragma once

#include <optional>
#include <vector>

#include "diffcolor/coloring.hpp"
#include "diffcolor/graph.hpp"

namespace diffcolor::testoracle {

/// Exhaustive maximum of the minimum edge color distance over all injective
/// assignments V -> {1..kn}, with branch-and-bound pruning. Edgeless graphs
/// report k*n, matching the verifier's sentinel.
int brute_force_optimum(const Graph& g, int k);

/// Plain DFS Hamiltonian path existence (independent of the bitmask DP).
bool brute_force_has_hamiltonian_path(const Graph& g);

/// Forbidden-subgraph witnesses by explicit subgraph enumeration: candidate
/// center/pair plus a large-enough attachment set.
bool brute_force_has_k1n1(const Graph& g);
bool brute_force_has_k2n2(const Graph& g);
bool brute_force_has_k11n3(const Graph& g);
/// Complete-bipartite test by enumerating all 2^(n-1) bipartitions.
bool brute_force_complete_bipartite(const Graph& g);

/// True iff classes form a proper coloring covering all vertices.
bool is_proper_cover(const Graph& g, const std::vector<std::vector<int>>& classes);

}  // namespace diffcolor::testoracle

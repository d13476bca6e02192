#pragma once

#include <cstdint>
#include <vector>

#include "diffcolor/graph.hpp"
#include "diffcolor/mapgen.hpp"

namespace diffcolor::testgen {

/// Connected G(n, p): random spanning tree (each vertex attaches to an
/// earlier one) plus independent extra edges.
Graph random_connected(int n, double extra_p, SplitMix64& rng);

/// Random bipartite graph with the given split; every cross pair appears
/// with probability p. Sides are {0..n1-1} and {n1..n1+n2-1}.
Graph random_bipartite(int n1, int n2, double p, SplitMix64& rng);

/// Maximal outerplanar graph: polygon 0..n-1 plus a random triangulation,
/// then every edge deleted with probability delete_p. Declared outerplanar.
Graph random_outerplanar(int n, double delete_p, SplitMix64& rng);

/// Random stacked triangulation (repeatedly split a random face with a new
/// vertex), then edges deleted with probability delete_p. Declared planar.
Graph random_planar(int n, double delete_p, SplitMix64& rng);

/// All 2^(n(n-1)/2) labeled graphs on n vertices, by edge-subset index.
Graph graph_from_mask(int n, uint64_t mask);
uint64_t max_mask(int n);

/// Canonical form (lexicographically smallest adjacency bitmask over all
/// vertex permutations); usable for isomorphism-free enumeration up to n=8.
uint64_t canonical_mask(const Graph& g);

/// Permute vertex labels of g by a seeded random permutation.
Graph shuffle_labels(const Graph& g, SplitMix64& rng, std::vector<int>* perm_out = nullptr);

}  // namespace diffcolor::testgen

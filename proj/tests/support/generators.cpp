#include "support/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace diffcolor::testgen {

Graph random_connected(int n, double extra_p, SplitMix64& rng) {
  std::set<Edge> have;
  for (int v = 1; v < n; ++v) {
    int u = rng.uniform(0, v - 1);
    have.insert({u, v});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(extra_p)) have.insert({u, v});
  return Graph(n, {have.begin(), have.end()});
}

Graph random_bipartite(int n1, int n2, double p, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v)
      if (rng.chance(p)) edges.emplace_back(u, n1 + v);
  return Graph(n1 + n2, std::move(edges), GraphClass::bipartite);
}

namespace {

// Triangulates the polygon stretch lo..hi (boundary/chord between the
// endpoints assumed present).
void triangulate(int lo, int hi, SplitMix64& rng, std::set<Edge>& edges) {
  if (hi - lo < 2) return;
  int mid = rng.uniform(lo + 1, hi - 1);
  if (mid - lo > 1) edges.insert({lo, mid});
  if (hi - mid > 1) edges.insert({mid, hi});
  triangulate(lo, mid, rng, edges);
  triangulate(mid, hi, rng, edges);
}

}  // namespace

Graph random_outerplanar(int n, double delete_p, SplitMix64& rng) {
  if (n < 3) throw std::invalid_argument("random_outerplanar: needs n >= 3");
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) edges.insert({v - 1, v});
  edges.insert({0, n - 1});
  triangulate(0, n - 1, rng, edges);
  std::vector<Edge> kept;
  for (const auto& e : edges)
    if (!rng.chance(delete_p)) kept.push_back(e);
  return Graph(n, std::move(kept), GraphClass::outerplanar);
}

Graph random_planar(int n, double delete_p, SplitMix64& rng) {
  if (n < 3) throw std::invalid_argument("random_planar: needs n >= 3");
  std::set<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};  // both sides of the triangle
  for (int v = 3; v < n; ++v) {
    int f = rng.uniform(0, static_cast<int>(faces.size()) - 1);
    auto [a, b, c] = faces[f];
    edges.insert({std::min(a, v), std::max(a, v)});
    edges.insert({std::min(b, v), std::max(b, v)});
    edges.insert({std::min(c, v), std::max(c, v)});
    faces[f] = {a, b, v};
    faces.push_back({{a, c, v}});
    faces.push_back({{b, c, v}});
  }
  std::vector<Edge> kept;
  for (const auto& e : edges)
    if (!rng.chance(delete_p)) kept.push_back(e);
  return Graph(n, std::move(kept), GraphClass::planar);
}

uint64_t max_mask(int n) {
  int pairs = n * (n - 1) / 2;
  if (pairs >= 64) throw std::invalid_argument("max_mask: too many pairs");
  return (1ull << pairs) - 1;
}

Graph graph_from_mask(int n, uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask & (1ull << bit)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

uint64_t canonical_mask(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ull;
  do {
    uint64_t mask = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (g.has_edge(perm[u], perm[v])) mask |= 1ull << bit;
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph shuffle_labels(const Graph& g, SplitMix64& rng, std::vector<int>* perm_out) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  if (perm_out) *perm_out = perm;
  return Graph(n, std::move(edges), g.declared_class());
}

}  // namespace diffcolor::testgen

#include "support/oracles.hpp"

#include <algorithm>
#include <cstdlib>

namespace diffcolor::testoracle {

namespace {

void bnb(const Graph& g, int v, int worst, std::vector<int>& colors, std::vector<char>& used,
         int range, int& best) {
  if (worst <= best) return;
  if (v == g.vertex_count()) {
    best = worst;
    return;
  }
  for (int c = 1; c <= range; ++c) {
    if (used[c]) continue;
    int w = worst;
    for (int nb : g.neighbors(v))
      if (nb < v) w = std::min(w, std::abs(c - colors[nb]));
    if (w <= best) continue;
    used[c] = 1;
    colors[v] = c;
    bnb(g, v + 1, w, colors, used, range, best);
    used[c] = 0;
  }
}

}  // namespace

int brute_force_optimum(const Graph& g, int k) {
  int n = g.vertex_count();
  int range = k * n;
  if (g.edge_count() == 0) return range;
  std::vector<int> colors(n, 0);
  std::vector<char> used(range + 1, 0);
  int best = 0;
  bnb(g, 0, range, colors, used, range, best);
  return best;
}

namespace {

bool ham_dfs(const Graph& g, int v, std::vector<char>& visited, int left) {
  if (left == 0) return true;
  for (int nb : g.neighbors(v)) {
    if (visited[nb]) continue;
    visited[nb] = 1;
    if (ham_dfs(g, nb, visited, left - 1)) return true;
    visited[nb] = 0;
  }
  return false;
}

}  // namespace

bool brute_force_has_hamiltonian_path(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> visited(n, 0);
  for (int s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    visited[s] = 1;
    if (ham_dfs(g, s, visited, n - 1)) return true;
  }
  return false;
}

bool brute_force_has_k1n1(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) return false;
  for (int center = 0; center < n; ++center) {
    bool all = true;
    for (int v = 0; v < n && all; ++v)
      if (v != center) all = g.has_edge(center, v);
    if (all) return true;
  }
  return false;
}

bool brute_force_has_k2n2(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int attached = 0;
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (g.has_edge(u, w) && g.has_edge(v, w)) ++attached;
      }
      if (attached >= n - 2) return true;
    }
  return false;
}

bool brute_force_has_k11n3(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return false;
  for (const auto& [u, v] : g.edges()) {
    int common = 0;
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (g.has_edge(u, w) && g.has_edge(v, w)) ++common;
    }
    if (common >= n - 3) return true;
  }
  return false;
}

bool brute_force_complete_bipartite(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2 || n > 24) return false;
  // Vertex 0 pinned to side A; enumerate the rest.
  for (uint32_t sub = 0; sub < (1u << (n - 1)); ++sub) {
    uint32_t side = (sub << 1) | 1u;  // bit v set = vertex v on side A
    bool ok = true;
    int count_a = 0;
    for (int v = 0; v < n; ++v)
      if (side & (1u << v)) ++count_a;
    if (count_a == n) continue;  // side B must be non-empty
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        bool same = ((side >> u) & 1) == ((side >> v) & 1);
        ok = g.has_edge(u, v) == !same;
      }
    if (ok) return true;
  }
  return false;
}

bool is_proper_cover(const Graph& g, const std::vector<std::vector<int>>& classes) {
  int n = g.vertex_count();
  std::vector<int> cls_of(n, -1);
  for (size_t i = 0; i < classes.size(); ++i)
    for (int v : classes[i]) {
      if (v < 0 || v >= n || cls_of[v] != -1) return false;
      cls_of[v] = static_cast<int>(i);
    }
  for (int v = 0; v < n; ++v)
    if (cls_of[v] == -1) return false;
  for (const auto& [u, v] : g.edges())
    if (cls_of[u] == cls_of[v]) return false;
  return true;
}

}  // namespace diffcolor::testoracle

#include "diffcolor/coloring.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace diffcolor {

std::optional<std::string> coloring_error(const Graph& g, const Coloring& c) {
  int n = g.vertex_count();
  if (c.n() != n)
    return "coloring covers " + std::to_string(c.n()) + " vertices, graph has " +
           std::to_string(n);
  if (c.k < 1) return "color multiplier k must be >= 1";
  int range = c.range();
  std::vector<int> owner(range + 1, -1);
  for (int v = 0; v < n; ++v) {
    int col = c.colors[v];
    if (col < 1 || col > range)
      return "vertex " + std::to_string(v) + " has color " + std::to_string(col) +
             " outside [1," + std::to_string(range) + "]";
    if (owner[col] != -1)
      return "vertices " + std::to_string(owner[col]) + " and " + std::to_string(v) +
             " share color " + std::to_string(col);
    owner[col] = v;
  }
  return std::nullopt;
}

int min_color_distance(const Graph& g, const Coloring& c) {
  if (auto err = coloring_error(g, c)) throw std::invalid_argument("invalid coloring: " + *err);
  if (g.edge_count() == 0) return c.range();
  int best = c.range();
  for (const auto& [u, v] : g.edges())
    best = std::min(best, std::abs(c.colors[u] - c.colors[v]));
  return best;
}

Coloring ordered_coloring(const Graph& g, const OrderedPartition& p, int k) {
  int n = g.vertex_count();
  if (k < 1) throw std::invalid_argument("ordered_coloring: k must be >= 1");
  std::vector<char> seen(n, 0);
  Coloring c;
  c.k = k;
  c.colors.assign(n, 0);
  int next = 1;
  for (const auto& set : p.sets) {
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("ordered_coloring: vertex " + std::to_string(v) +
                                    " out of range");
      if (seen[v])
        throw std::invalid_argument("ordered_coloring: vertex " + std::to_string(v) +
                                    " appears in two sets");
      seen[v] = 1;
      c.colors[v] = next++;
    }
  }
  if (next != n + 1)
    throw std::invalid_argument("ordered_coloring: sets cover " + std::to_string(next - 1) +
                                " of " + std::to_string(n) + " vertices");
  return c;
}

Coloring trivial_coloring(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("trivial_coloring: k must be >= 1");
  Coloring c;
  c.k = k;
  c.colors.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) c.colors[v] = k * (v + 1);
  return c;
}

int upper_bound(int n, int k) {
  if (n < 2) throw std::invalid_argument("upper_bound: needs n >= 2 (connected graph)");
  if (k < 1) throw std::invalid_argument("upper_bound: k must be >= 1");
  return n / 2 + (k - 1) * n;
}

int mcolorable_lower_bound(int n, int k, int m) {
  if (m < 2) throw std::invalid_argument("mcolorable_lower_bound: needs m >= 2");
  if (k < 1) throw std::invalid_argument("mcolorable_lower_bound: k must be >= 1");
  return (k - 1) * n / (m - 1) + 1;
}

Coloring coloring_from_proper(const Graph& g, const std::vector<std::vector<int>>& classes,
                              int k) {
  int n = g.vertex_count();
  int m = static_cast<int>(classes.size());
  if (m < 2) throw std::invalid_argument("coloring_from_proper: needs at least 2 classes");
  for (const auto& cls : classes)
    if (cls.empty()) throw std::invalid_argument("coloring_from_proper: empty class");

  std::vector<int> cls_of(n, -1);
  for (int i = 0; i < m; ++i)
    for (int v : classes[i]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("coloring_from_proper: vertex out of range");
      if (cls_of[v] != -1)
        throw std::invalid_argument("coloring_from_proper: vertex " + std::to_string(v) +
                                    " in two classes");
      cls_of[v] = i;
    }
  for (int v = 0; v < n; ++v)
    if (cls_of[v] == -1)
      throw std::invalid_argument("coloring_from_proper: vertex " + std::to_string(v) +
                                  " not covered");
  for (const auto& [u, v] : g.edges())
    if (cls_of[u] == cls_of[v])
      throw std::invalid_argument("coloring_from_proper: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") inside class " +
                                  std::to_string(cls_of[u]));

  int gap = (k - 1) * n / (m - 1);
  Coloring c;
  c.k = k;
  c.colors.assign(n, 0);
  int consumed = 0;
  for (int i = 0; i < m; ++i) {
    std::vector<int> sorted = classes[i];
    std::sort(sorted.begin(), sorted.end());
    int base = consumed + i * gap;  // class i occupies base+1 .. base+|C_i|
    for (size_t t = 0; t < sorted.size(); ++t) c.colors[sorted[t]] = base + 1 + static_cast<int>(t);
    consumed += static_cast<int>(sorted.size());
  }
  return c;
}

}  // namespace diffcolor

#include "diffcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace diffcolor {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::general: return "general";
    case GraphClass::bipartite: return "bipartite";
    case GraphClass::outerplanar: return "outerplanar";
    case GraphClass::planar: return "planar";
  }
  return "general";
}

std::optional<GraphClass> graph_class_from_string(const std::string& s) {
  if (s == "general") return GraphClass::general;
  if (s == "bipartite") return GraphClass::bipartite;
  if (s == "outerplanar") return GraphClass::outerplanar;
  if (s == "planar") return GraphClass::planar;
  return std::nullopt;
}

Graph::Graph(int n, std::vector<Edge> edges, GraphClass cls)
    : n_(n), class_(cls) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range for n=" + std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: duplicate edge");
  edges_ = std::move(edges);

  long long m = static_cast<long long>(edges_.size());
  if (cls == GraphClass::outerplanar && n >= 2 && m > 2LL * n - 3)
    throw std::invalid_argument("graph: edge count " + std::to_string(m) +
                                " exceeds outerplanar bound 2n-3");
  if (cls == GraphClass::planar && n >= 3 && m > 3LL * n - 6)
    throw std::invalid_argument("graph: edge count " + std::to_string(m) +
                                " exceeds planar bound 3n-6");

  adj_.assign(n_, {});
  matrix_.assign(static_cast<size_t>(n_) * n_, 0);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    matrix_[static_cast<size_t>(u) * n_ + v] = 1;
    matrix_[static_cast<size_t>(v) * n_ + u] = 1;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return matrix_[static_cast<size_t>(u) * n_ + v] != 0;
}

Graph Graph::with_class(GraphClass cls) const { return Graph(n_, edges_, cls); }

Graph Graph::empty(int n) { return Graph(n, {}); }

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph Graph::star(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, std::move(e), GraphClass::bipartite);
}

Graph Graph::grid(int rows, int cols) {
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, std::move(e), GraphClass::planar);
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph join(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<Edge> e = g.edges();
  for (const auto& [u, v] : h.edges()) e.emplace_back(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) e.emplace_back(u, ng + v);
  return Graph(ng + nh, std::move(e));
}

ForbiddenReport detect_forbidden(const Graph& g) {
  ForbiddenReport rep;
  int n = g.vertex_count();

  for (int v = 0; v < n && !rep.star_center; ++v)
    if (g.degree(v) == n - 1 && n >= 2) rep.star_center = v;

  if (n >= 4) {
    // K_{2,n-2}: u and v (adjacent or not) both adjacent to all other n-2 vertices.
    for (int u = 0; u < n && !rep.k2_pair; ++u) {
      if (g.degree(u) < n - 2) continue;
      for (int v = u + 1; v < n && !rep.k2_pair; ++v) {
        if (g.degree(v) < n - 2) continue;
        bool ok = true;
        for (int w = 0; w < n && ok; ++w) {
          if (w == u || w == v) continue;
          ok = g.has_edge(u, w) && g.has_edge(v, w);
        }
        if (ok) rep.k2_pair = Edge{u, v};
      }
    }
    // K_{1,1,n-3}: adjacent pair sharing at least n-3 common neighbors.
    for (int u = 0; u < n && !rep.k11_pair; ++u) {
      for (int v = u + 1; v < n && !rep.k11_pair; ++v) {
        if (!g.has_edge(u, v)) continue;
        int common = 0;
        for (int w = 0; w < n; ++w) {
          if (w == u || w == v) continue;
          if (g.has_edge(u, w) && g.has_edge(v, w)) ++common;
        }
        if (common >= n - 3) rep.k11_pair = Edge{u, v};
      }
    }
  }

  // Complete bipartite: connected, 2-colorable, and |E| = |A|*|B|.
  if (g.edge_count() > 0 && is_connected(g)) {
    auto sides = bipartition_of(g);
    if (sides) {
      long long a = static_cast<long long>(sides->first.size());
      long long b = static_cast<long long>(sides->second.size());
      if (a > 0 && b > 0 && g.edge_count() == a * b) {
        rep.complete_bipartite = true;
        rep.side_a = sides->first;
        rep.side_b = sides->second;
      }
    }
  }
  return rep;
}

std::optional<Edge> find_nonadjacent_pair(const Graph& g, std::vector<int> a,
                                          std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int u : a)
    if (std::binary_search(b.begin(), b.end(), u))
      throw std::invalid_argument("find_nonadjacent_pair: sets share vertex " +
                                  std::to_string(u));
  for (int u : a)
    for (int v : b)
      if (!g.has_edge(u, v)) return Edge{u, v};
  return std::nullopt;
}

std::vector<int> component_ids(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (comp[v] == -1) {
          comp[v] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  auto comp = component_ids(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_of(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

}  // namespace diffcolor

#include "diffcolor/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace diffcolor {

std::string to_string(SolveOutcome o) {
  switch (o) {
    case SolveOutcome::feasible: return "feasible";
    case SolveOutcome::infeasible: return "infeasible";
    case SolveOutcome::timeout: return "timeout";
  }
  return "infeasible";
}

std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
  int n = g.vertex_count();
  if (n > kHamiltonianMaxN)
    throw std::invalid_argument("hamiltonian_path: n=" + std::to_string(n) +
                                " exceeds budget of " + std::to_string(kHamiltonianMaxN));
  if (n == 0) return std::vector<int>{};
  if (n == 1) return std::vector<int>{0};
  if (!is_connected(g)) return std::nullopt;

  std::vector<uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }

  // ends[mask] = set of vertices some path visiting exactly `mask` can end at.
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<uint32_t> ends(static_cast<size_t>(full) + 1, 0);
  for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    uint32_t e = ends[mask];
    if (!e) continue;
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      uint32_t ext = adj[v] & ~mask;
      while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        ends[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  if (!ends[full]) return std::nullopt;

  // Reconstruct backwards: at each step pick the lowest feasible end vertex.
  std::vector<int> path;
  uint32_t mask = full;
  int v = std::countr_zero(ends[full]);
  while (true) {
    path.push_back(v);
    uint32_t prev = mask & ~(1u << v);
    if (!prev) break;
    uint32_t cand = ends[prev] & adj[v];
    v = std::countr_zero(cand);
    mask = prev;
  }
  if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  return path;
}

std::optional<Coloring> decide_2n(const Graph& g) {
  auto path = hamiltonian_path(complement(g));
  if (!path) return std::nullopt;
  Coloring c;
  c.k = 1;
  c.colors.assign(g.vertex_count(), 0);
  for (int i = 0; i < static_cast<int>(path->size()); ++i) c.colors[(*path)[i]] = i + 1;
  return c;
}

namespace {

struct FeasibleSearch {
  const Graph& g;
  int d, range;
  std::vector<int> order;       // vertices in assignment order
  std::vector<int> color_of;    // by vertex, 0 = unassigned
  std::vector<char> used;       // by color
  long long budget;
  long long nodes = 0;
  bool out_of_budget = false;

  bool compatible(int v, int col) const {
    for (int nb : g.neighbors(v)) {
      int c = color_of[nb];
      if (c != 0 && std::abs(c - col) < d) return false;
    }
    return true;
  }

  bool assign(size_t idx) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (idx == order.size()) return true;
    int v = order[idx];
    // Reversing all colors maps solutions to solutions, so the first vertex
    // only needs to scan the lower half of the range.
    int hi = (idx == 0) ? (range + 1) / 2 : range;
    for (int col = 1; col <= hi; ++col) {
      if (used[col] || !compatible(v, col)) continue;
      used[col] = 1;
      color_of[v] = col;
      if (assign(idx + 1)) return true;
      used[col] = 0;
      color_of[v] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

SolveReport feasible(const Graph& g, int d, int k, long long node_budget) {
  if (d < 1) throw std::invalid_argument("feasible: d must be >= 1");
  if (k < 1) throw std::invalid_argument("feasible: k must be >= 1");
  auto t0 = std::chrono::steady_clock::now();

  int n = g.vertex_count();
  FeasibleSearch s{g, d, k * n, {}, {}, {}, node_budget};
  s.order.resize(n);
  for (int v = 0; v < n; ++v) s.order[v] = v;
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  s.color_of.assign(n, 0);
  s.used.assign(s.range + 1, 0);

  bool found = s.assign(0);
  SolveReport rep;
  rep.nodes_explored = s.nodes;
  rep.wall_time = std::chrono::steady_clock::now() - t0;
  if (found) {
    rep.outcome = SolveOutcome::feasible;
    Coloring c;
    c.k = k;
    c.colors = s.color_of;
    rep.coloring = std::move(c);
  } else {
    rep.outcome = s.out_of_budget ? SolveOutcome::timeout : SolveOutcome::infeasible;
  }
  return rep;
}

SolveReport k_diff_chromatic(const Graph& g, int k, long long node_budget) {
  if (k < 1) throw std::invalid_argument("k_diff_chromatic: k must be >= 1");
  if (!is_connected(g))
    throw std::invalid_argument("k_diff_chromatic: graph must be connected");
  int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("k_diff_chromatic: needs n >= 2");

  auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  long long remaining = node_budget;

  // Invariant: lo is feasible (witnessed), hi+1 .. are infeasible.
  int lo = k, hi = upper_bound(n, k);
  bool lo_witnessed = false;
  while (true) {
    int probe = lo_witnessed ? (lo + hi + 1) / 2 : lo;
    SolveReport sub = feasible(g, probe, k, remaining);
    rep.nodes_explored += sub.nodes_explored;
    remaining -= sub.nodes_explored;
    if (sub.outcome == SolveOutcome::timeout) {
      rep.outcome = SolveOutcome::timeout;
      rep.searched = {lo_witnessed ? lo : lo - 1, hi};
      break;
    }
    if (sub.outcome == SolveOutcome::feasible) {
      lo = probe;
      lo_witnessed = true;
      rep.coloring = std::move(sub.coloring);
    } else {
      if (!lo_witnessed)
        throw std::logic_error("k_diff_chromatic: d=k infeasible on a connected graph");
      hi = probe - 1;
    }
    if (lo_witnessed && lo >= hi) {
      rep.outcome = SolveOutcome::feasible;
      rep.optimum_d = lo;
      break;
    }
  }
  rep.wall_time = std::chrono::steady_clock::now() - t0;
  return rep;
}

namespace {

struct ColorSearch {
  const Graph& g;
  int m;
  std::vector<int> color_of;  // 0 = unassigned
  long long budget;
  long long nodes = 0;
  bool out_of_budget = false;

  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
      if (color_of[v] != 0) continue;
      uint64_t mask = 0;
      for (int nb : g.neighbors(v))
        if (color_of[nb] != 0) mask |= 1ull << color_of[nb];
      int sat = std::popcount(mask);
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool solve(int assigned, int max_used) {
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (assigned == g.vertex_count()) return true;
    int v = pick();
    // Colors beyond max_used+1 are interchangeable with max_used+1.
    int limit = std::min(m, max_used + 1);
    for (int col = 1; col <= limit; ++col) {
      bool ok = true;
      for (int nb : g.neighbors(v))
        if (color_of[nb] == col) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_of[v] = col;
      if (solve(assigned + 1, std::max(max_used, col))) return true;
      color_of[v] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> proper_coloring(const Graph& g, int m,
                                                             long long node_budget) {
  if (m < 1) throw std::invalid_argument("proper_coloring: m must be >= 1");
  int n = g.vertex_count();
  if (n == 0) return std::vector<std::vector<int>>(m);
  if (m > 62) throw std::invalid_argument("proper_coloring: m too large");

  ColorSearch s{g, m, std::vector<int>(n, 0), node_budget};
  if (!s.solve(0, 0)) {
    if (s.out_of_budget) throw std::runtime_error("proper_coloring: node budget exhausted");
    return std::nullopt;
  }
  std::vector<std::vector<int>> classes(m);
  for (int v = 0; v < n; ++v) classes[s.color_of[v] - 1].push_back(v);
  return classes;
}

int chromatic_number(const Graph& g, long long node_budget) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  for (int m = 1; m <= n; ++m)
    if (proper_coloring(g, m, node_budget)) return m;
  throw std::logic_error("chromatic_number: no coloring with n colors");
}

}  // namespace diffcolor

#include "diffcolor/ilp.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "diffcolor/exact.hpp"

namespace diffcolor {

IlpModel build_model(const Graph& g, int k, bool dedupe_distinctness) {
  if (k < 1) throw std::invalid_argument("build_model: k must be >= 1");
  IlpModel m;
  m.original_n = g.vertex_count();
  m.k = k;
  m.var_count = k * g.vertex_count();
  m.big_m = 2 * m.var_count;
  m.edges = g.edges();
  m.deduped = dedupe_distinctness;

  int next_binary = 1;
  for (int i = 0; i < m.var_count; ++i)
    for (int j = i + 1; j < m.var_count; ++j) {
      if (dedupe_distinctness && g.has_edge(i, j)) continue;
      m.rows.push_back({i, j, false, next_binary++});
    }
  for (const auto& [u, v] : m.edges) m.rows.push_back({u, v, true, next_binary++});
  return m;
}

std::string emit_lp(const IlpModel& m) {
  std::ostringstream out;
  out << "\\ maximum differential coloring, n=" << m.original_n << ", k=" << m.k
      << ", vars=" << m.var_count << ", M=" << m.big_m << "\n";
  out << "Maximize\n obj: OPT\nSubject To\n";
  int cid = 1;
  for (const auto& r : m.rows) {
    std::string xi = "x" + std::to_string(r.i + 1);
    std::string xj = "x" + std::to_string(r.j + 1);
    std::string b = "b" + std::to_string(r.binary);
    if (r.uses_opt) {
      // |xi - xj| >= OPT
      out << " c" << cid++ << ": " << xi << " - " << xj << " - OPT + " << m.big_m << ' ' << b
          << " >= 0\n";
      out << " c" << cid++ << ": - " << xi << " + " << xj << " - OPT - " << m.big_m << ' ' << b
          << " >= " << -m.big_m << "\n";
    } else {
      // |xi - xj| >= 1
      out << " c" << cid++ << ": " << xi << " - " << xj << " + " << m.big_m << ' ' << b
          << " >= 1\n";
      out << " c" << cid++ << ": - " << xi << " + " << xj << " - " << m.big_m << ' ' << b
          << " >= " << 1 - m.big_m << "\n";
    }
  }
  out << "Bounds\n";
  for (int i = 1; i <= m.var_count; ++i)
    out << " 1 <= x" << i << " <= " << m.var_count << "\n";
  out << " 1 <= OPT <= " << m.var_count << "\n";
  out << "General\n";
  for (int i = 1; i <= m.var_count; ++i) out << " x" << i << "\n";
  out << " OPT\n";
  if (!m.rows.empty()) {
    out << "Binary\n";
    for (const auto& r : m.rows) out << " b" << r.binary << "\n";
  }
  out << "End\n";
  return out.str();
}

bool rows_satisfied(const IlpModel& m, const std::vector<int>& x, int opt) {
  if (static_cast<int>(x.size()) != m.var_count) return false;
  for (int v : x)
    if (v < 1 || v > m.var_count) return false;
  for (const auto& r : m.rows) {
    int diff = x[r.i] - x[r.j];
    int z = r.uses_opt ? opt : 1;
    // b = 0 demands diff >= z, b = 1 demands -diff >= z; the slack row is
    // always satisfiable because M = 2 * var_count bounds |diff| + z.
    bool b0 = (diff >= z) && (-diff + m.big_m >= z);
    bool b1 = (diff + m.big_m >= z) && (-diff >= z);
    if (!b0 && !b1) return false;
  }
  return true;
}

namespace {

// Independent oracle: maximize the minimum edge distance over injective
// assignments of the original vertices into 1..kn, by exhaustive branch and
// bound (isolated augmentation vertices never constrain the optimum).
int enumerate_optimum(const Graph& g, int k) {
  int n = g.vertex_count();
  int range = k * n;
  std::vector<int> colors(n, 0);
  std::vector<char> used(range + 1, 0);
  int best = 0;

  auto recurse = [&](auto&& self, int v, int worst) -> void {
    if (worst <= best) return;  // cannot beat the incumbent
    if (v == n) {
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
      self(self, v + 1, w);
      used[c] = 0;
    }
  };
  recurse(recurse, 0, range);
  return best;
}

}  // namespace

ModelValidation validate_model(const Graph& g, int k) {
  int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("validate_model: n <= 8 (exact-solver budget)");
  if (n < 2) throw std::invalid_argument("validate_model: needs n >= 2");
  if (!is_connected(g))
    throw std::invalid_argument("validate_model: graph must be connected");

  ModelValidation res;
  IlpModel m = build_model(g, k);

  // Route 1: the k-differential optimum of the original graph.
  SolveReport exact = k_diff_chromatic(g, k);
  if (exact.outcome != SolveOutcome::feasible) {
    res.detail = "exact solver timed out";
    return res;
  }
  res.exact_optimum = *exact.optimum_d;

  // Route 2: the model's own semantics, i.e. the 1-differential optimum of
  // the augmented graph. Probe feasibility of each candidate OPT over the
  // augmentation (isolated vertices included, colors 1..var_count).
  Graph augmented(m.var_count, g.edges());
  int lo = 1, hi = m.var_count;
  if (augmented.edge_count() == 0) lo = hi;
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    SolveReport probe = feasible(augmented, mid, 1);
    if (probe.outcome == SolveOutcome::feasible)
      lo = mid;
    else
      hi = mid - 1;
  }
  res.model_optimum = lo;
  if (res.model_optimum != res.exact_optimum) {
    res.detail = "model optimum " + std::to_string(res.model_optimum) +
                 " != exact optimum " + std::to_string(res.exact_optimum);
    return res;
  }

  // Independent enumeration for small instances.
  if (n <= 6) {
    int enumerated = enumerate_optimum(g, k);
    if (enumerated != res.exact_optimum) {
      res.detail = "enumeration found " + std::to_string(enumerated) + ", exact found " +
                   std::to_string(res.exact_optimum);
      return res;
    }
  }

  // Row satisfaction of a witness assignment at OPT = optimum.
  SolveReport wit = feasible(augmented, res.model_optimum, 1);
  if (wit.outcome != SolveOutcome::feasible || !wit.coloring) {
    res.detail = "witness re-solve failed";
    return res;
  }
  const std::vector<int>& x = wit.coloring->colors;
  if (!rows_satisfied(m, x, res.model_optimum)) {
    res.detail = "witness assignment violates an emitted row at OPT = optimum";
    return res;
  }
  if (!m.edges.empty() && rows_satisfied(m, x, res.model_optimum + 1)) {
    res.detail = "witness assignment also satisfies OPT = optimum + 1 (rows too loose)";
    return res;
  }

  res.ok = true;
  return res;
}

}  // namespace diffcolor

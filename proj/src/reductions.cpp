#include "diffcolor/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffcolor {

std::string ReductionInstance::kind_name() const {
  if (kind == ReductionKind::path_attach) return "path_attach_planar";
  return k == 2 ? "join_3_2n" : "join_kplus1_kn";
}

ReductionInstance reduce_join(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("reduce_join: k must be >= 2");
  int n = g.vertex_count();
  ReductionInstance inst;
  inst.kind = ReductionKind::join;
  inst.k = k;
  inst.source = g;
  inst.target = join(g, Graph::complete((k - 1) * n));
  inst.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) inst.vertex_map[v] = v;
  for (int i = 0; i < (k - 1) * n; ++i) inst.gadget_vertices.push_back(n + i);
  return inst;
}

Coloring lift_join_coloring(const ReductionInstance& inst, const Coloring& l) {
  if (inst.kind != ReductionKind::join)
    throw std::invalid_argument("lift_join_coloring: not a join instance");
  int n = inst.source.vertex_count();
  int d = inst.k + 1;

  // The source coloring lives in the plain 1..n window.
  Coloring src = l;
  src.k = 1;
  if (auto err = coloring_error(inst.source, src))
    throw std::invalid_argument("lift_join_coloring: source coloring invalid: " + *err);
  if (min_color_distance(inst.source, src) < d)
    throw std::invalid_argument("lift_join_coloring: source coloring has distance < " +
                                std::to_string(d));

  Coloring out;
  out.k = inst.k;
  out.colors.assign(inst.target.vertex_count(), 0);
  for (int v = 0; v < n; ++v) out.colors[v] = l.colors[v];
  for (size_t i = 0; i < inst.gadget_vertices.size(); ++i)
    out.colors[inst.gadget_vertices[i]] = n + d * static_cast<int>(i + 1);
  if (min_color_distance(inst.target, out) < d)
    throw std::logic_error("lift_join_coloring: lifted coloring lost the distance guarantee");
  return out;
}

namespace {

struct ByColor {
  const std::vector<int>& colors;
  bool operator()(int a, int b) const { return colors[a] < colors[b]; }
};

}  // namespace

Coloring normalize_join_coloring(const ReductionInstance& inst, Coloring l) {
  if (inst.kind != ReductionKind::join)
    throw std::invalid_argument("normalize_join_coloring: not a join instance");
  int n = inst.source.vertex_count();
  int nt = inst.target.vertex_count();
  int d = inst.k + 1;
  int range = inst.k * nt;
  if (l.k != inst.k || l.n() != nt)
    throw std::invalid_argument("normalize_join_coloring: coloring does not fit the target");
  if (min_color_distance(inst.target, l) < d)
    throw std::invalid_argument("normalize_join_coloring: target coloring has distance < " +
                                std::to_string(d));
  if (n == 0) return Coloring{1, {}};

  std::vector<char> is_gadget(nt, 0);
  for (int u : inst.gadget_vertices) is_gadget[u] = 1;

  auto sorted_side = [&](bool gadget) {
    std::vector<int> vs;
    for (int v = 0; v < nt; ++v)
      if (is_gadget[v] == gadget) vs.push_back(v);
    std::sort(vs.begin(), vs.end(), ByColor{l.colors});
    return vs;
  };

  for (int iter = 0; iter <= nt * nt; ++iter) {
    std::vector<int> vs = sorted_side(false);  // source vertices by color
    std::vector<int> us = sorted_side(true);   // gadget vertices by color

    if (l.colors[vs.front()] > l.colors[us.back()]) {
      // Every source color above every gadget color: reverse the whole range.
      for (int v = 0; v < nt; ++v) l.colors[v] = range + 1 - l.colors[v];
      continue;
    }

    // Maximal prefix run of gadget vertices with no source color inside.
    size_t j = 0;
    auto src_color_in = [&](int lo, int hi) {
      for (int v : vs)
        if (l.colors[v] > lo && l.colors[v] < hi) return true;
      return false;
    };
    while (j + 1 < us.size() && !src_color_in(l.colors[us[0]], l.colors[us[j + 1]])) ++j;
    int run_top = l.colors[us[j]];

    // First source vertex colored above the run; none means we are done.
    size_t k_idx = 0;
    while (k_idx < vs.size() && l.colors[vs[k_idx]] < run_top) ++k_idx;
    if (k_idx == vs.size()) break;

    // Maximal source run starting there with no gadget color inside.
    size_t l_idx = k_idx;
    while (l_idx + 1 < vs.size()) {
      bool blocked = false;
      for (int u : us)
        if (l.colors[u] > l.colors[vs[l_idx]] && l.colors[u] < l.colors[vs[l_idx + 1]]) {
          blocked = true;
          break;
        }
      if (blocked) break;
      ++l_idx;
    }

    // Swap the two runs inside their color span: the source run drops onto
    // the old bottom, the gadget run rises onto the old top. Cross pairs are
    // all edges, so the boundary gaps that re-form are >= d.
    int lo = l.colors[us[0]];
    int hi = l.colors[vs[l_idx]];
    int shift_down = l.colors[vs[k_idx]] - lo;
    int shift_up = hi - run_top;
    for (size_t t = k_idx; t <= l_idx; ++t) l.colors[vs[t]] -= shift_down;
    for (size_t t = 0; t <= j; ++t) l.colors[us[t]] += shift_up;

    if (min_color_distance(inst.target, l) < d)
      throw std::logic_error(
          "normalize_join_coloring: block swap broke the distance guarantee (swap at colors " +
          std::to_string(lo) + ".." + std::to_string(hi) + ")");
  }

  Coloring out;
  out.k = 1;
  out.colors.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    out.colors[v] = l.colors[v];
    if (out.colors[v] > n)
      throw std::logic_error("normalize_join_coloring: source vertex left outside 1..n");
  }
  if (min_color_distance(inst.source, out) < d)
    throw std::logic_error("normalize_join_coloring: extracted source coloring below distance");
  return out;
}

ReductionInstance reduce_path_attach(const Graph& g) {
  if (g.declared_class() != GraphClass::planar)
    throw std::invalid_argument("reduce_path_attach: source must be declared planar");
  int n = g.vertex_count();
  ReductionInstance inst;
  inst.kind = ReductionKind::path_attach;
  inst.k = 2;
  inst.source = g;
  std::vector<Edge> edges = g.edges();
  inst.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) {
    inst.vertex_map[v] = v;
    edges.emplace_back(v, n + v);
    edges.emplace_back(n + v, 2 * n + v);
    inst.pendant_paths.emplace_back(n + v, 2 * n + v);
  }
  inst.target = Graph(3 * n, std::move(edges), GraphClass::planar);
  return inst;
}

Coloring lift_3coloring(const ReductionInstance& inst,
                        const std::vector<std::vector<int>>& classes) {
  if (inst.kind != ReductionKind::path_attach)
    throw std::invalid_argument("lift_3coloring: not a path-attach instance");
  int n = inst.source.vertex_count();
  if (classes.size() != 3) throw std::invalid_argument("lift_3coloring: expected 3 classes");

  std::vector<int> cls_of(n, -1);
  for (int i = 0; i < 3; ++i)
    for (int v : classes[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("lift_3coloring: vertex out of range");
      if (cls_of[v] != -1) throw std::invalid_argument("lift_3coloring: vertex in two classes");
      cls_of[v] = i;
    }
  for (int v = 0; v < n; ++v)
    if (cls_of[v] == -1) throw std::invalid_argument("lift_3coloring: vertex not covered");
  for (const auto& [u, v] : inst.source.edges())
    if (cls_of[u] == cls_of[v])
      throw std::invalid_argument("lift_3coloring: classes not a proper coloring");

  int n1 = static_cast<int>(classes[0].size());
  int n2 = static_cast<int>(classes[1].size());

  Coloring out;
  out.k = 2;
  out.colors.assign(3 * n, 0);
  // Class blocks for the source vertices: 1.., 3n+|C1|+1.., 5n+|C1|+|C2|+1..
  int base[3] = {0, 3 * n + n1, 5 * n + n1 + n2};
  for (int i = 0; i < 3; ++i) {
    std::vector<int> sorted = classes[i];
    std::sort(sorted.begin(), sorted.end());
    int next = base[i] + 1;
    for (int v : sorted) out.colors[v] = next++;
  }
  // Pendant paths: v1 offset by +2n / -2n / -4n depending on v's class,
  // v2 sits 3n+|C2| above v1.
  int off[3] = {2 * n, -2 * n, -4 * n};
  for (int v = 0; v < n; ++v) {
    auto [v1, v2] = inst.pendant_paths[v];
    out.colors[v1] = out.colors[v] + off[cls_of[v]];
    out.colors[v2] = out.colors[v1] + 3 * n + n2;
  }
  int d = 2 * n;  // = floor(2 * 3n / 3)
  if (n > 0 && min_color_distance(inst.target, out) < d)
    throw std::logic_error("lift_3coloring: lifted coloring lost the distance guarantee");
  return out;
}

std::vector<std::vector<int>> extract_3coloring(const ReductionInstance& inst, const Coloring& l) {
  if (inst.kind != ReductionKind::path_attach)
    throw std::invalid_argument("extract_3coloring: not a path-attach instance");
  int n = inst.source.vertex_count();
  int nt = 3 * n;
  int d = 2 * n;
  if (l.n() != nt || l.k != 2)
    throw std::invalid_argument("extract_3coloring: coloring does not fit the target");
  std::vector<std::vector<int>> classes(3);
  if (n == 0) return classes;
  if (min_color_distance(inst.target, l) < d)
    throw std::invalid_argument("extract_3coloring: coloring has distance < " + std::to_string(d));

  for (int u = 0; u < nt; ++u) {
    int block = (l.colors[u] - 1) / (2 * n);  // three blocks of width 2n over 1..6n
    classes[block].push_back(u);
  }
  for (const auto& [u, v] : inst.target.edges()) {
    if ((l.colors[u] - 1) / (2 * n) == (l.colors[v] - 1) / (2 * n))
      throw std::logic_error("extract_3coloring: same-block edge despite distance precondition");
  }
  return classes;
}

}  // namespace diffcolor

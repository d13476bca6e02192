#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diffcolor {

/// Unordered vertex pair, normalized to first < second on construction.
using Edge = std::pair<int, int>;

enum class GraphClass { general, bipartite, outerplanar, planar };

std::string to_string(GraphClass c);
std::optional<GraphClass> graph_class_from_string(const std::string& s);

/// Immutable undirected simple graph. Vertices are 0..n-1.
///
/// A declared class is a promise made by the producer of the graph, not a
/// certified property; construction only enforces the Euler edge bounds
/// (|E| <= 2n-3 for outerplanar, |E| <= 3n-6 for planar, n >= 3) and
/// rejects the tag otherwise. Algorithms that rely on a declared class
/// throw ClassViolationError when the promise turns out to be false.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges, GraphClass cls = GraphClass::general);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  GraphClass declared_class() const { return class_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges normalized (u < v) and sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbors of v in ascending order.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  /// Same graph with a different declared class (edge bounds re-checked).
  Graph with_class(GraphClass cls) const;

  // Common constructions, used all over the tests and generators.
  static Graph empty(int n);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int n);  // K_{1,n-1}: hub 0, leaves 1..n-1
  static Graph complete_bipartite(int a, int b);
  static Graph grid(int rows, int cols);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> matrix_;  // n*n adjacency, for O(1) has_edge
  GraphClass class_ = GraphClass::general;
};

/// Thrown when an operation that depends on a declared graph class
/// (outerplanar / planar) runs into evidence that the declaration is wrong.
struct ClassViolationError : std::runtime_error {
  explicit ClassViolationError(const std::string& what) : std::runtime_error(what) {}
};

/// Witnesses of the subgraphs that obstruct (2,n)-differential colorability.
struct ForbiddenReport {
  std::optional<int> star_center;                 // K_{1,n-1}: vertex of degree n-1
  std::optional<Edge> k2_pair;                    // K_{2,n-2}: both adjacent to all other n-2
  std::optional<Edge> k11_pair;                   // K_{1,1,n-3}: adjacent pair with n-3 common neighbors
  bool complete_bipartite = false;
  std::vector<int> side_a, side_b;                // bipartition when complete_bipartite

  bool any() const {
    return star_center || k2_pair || k11_pair || complete_bipartite;
  }
};

/// Complement graph: (u,v) is an edge iff it is not one in g. Declared class dropped.
Graph complement(const Graph& g);

/// Join: disjoint union plus all cross edges; h's vertices re-indexed after g's.
Graph join(const Graph& g, const Graph& h);

/// Scans for K_{1,n-1}, K_{2,n-2}, K_{1,1,n-3} and complete-bipartiteness by
/// direct degree / common-neighborhood checks. Witnesses are the
/// lowest-indexed ones. The K_{2,n-2} / K_{1,1,n-3} checks require n >= 4;
/// below that they report absent.
ForbiddenReport detect_forbidden(const Graph& g);

/// Lexicographically smallest (u in a, v in b) with (u,v) not an edge, or
/// nullopt if every cross pair is adjacent. a and b must be disjoint.
std::optional<Edge> find_nonadjacent_pair(const Graph& g, std::vector<int> a,
                                          std::vector<int> b);

// Small structural helpers shared by several modules.
bool is_connected(const Graph& g);
std::vector<int> component_ids(const Graph& g);  // per-vertex component index
/// 2-coloring sides via BFS (component roots in index order on side a), or
/// nullopt if some component has an odd cycle.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_of(const Graph& g);

}  // namespace diffcolor

#include "doctest.h"

#include "diffcolor/coloring.hpp"
#include "support/generators.hpp"

using namespace diffcolor;
namespace gen = diffcolor::testgen;

TEST_SUITE("coloring") {

TEST_CASE("verifier on small hand cases") {
  Graph star = Graph::star(4);
  CHECK(min_color_distance(star, Coloring{1, {1, 2, 3, 4}}) == 1);
  // Hub gets the top of the doubled range, leaves sit at the bottom.
  CHECK(min_color_distance(star, Coloring{2, {8, 1, 2, 3}}) == 5);

  Graph p4 = Graph::path(4);
  CHECK(min_color_distance(p4, Coloring{1, {2, 4, 1, 3}}) == 2);
}

TEST_CASE("verifier reports offending vertices") {
  Graph p3 = Graph::path(3);
  auto dup = coloring_error(p3, Coloring{1, {1, 1, 2}});
  REQUIRE(dup.has_value());
  CHECK(dup->find("share color") != std::string::npos);
  auto range = coloring_error(p3, Coloring{1, {0, 1, 2}});
  REQUIRE(range.has_value());
  CHECK(range->find("vertex 0") != std::string::npos);
  CHECK_THROWS_AS(min_color_distance(p3, Coloring{1, {1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("edgeless graphs report the k*n sentinel") {
  CHECK(min_color_distance(Graph::empty(4), Coloring{1, {1, 2, 3, 4}}) == 4);
  CHECK(min_color_distance(Graph::empty(2), Coloring{3, {2, 6}}) == 6);
}

TEST_CASE("ordered coloring blocks and order") {
  Graph g = Graph::empty(3);
  OrderedPartition p{{{0, 1}, {2}}};
  CHECK(ordered_coloring(g, p).colors == std::vector<int>{1, 2, 3});

  OrderedPartition rev{{{2}, {0, 1}}};
  CHECK(ordered_coloring(g, rev).colors == std::vector<int>{2, 3, 1});

  OrderedPartition single{{{2, 0, 1}}};
  CHECK(ordered_coloring(g, single).colors == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(ordered_coloring(g, OrderedPartition{{{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(ordered_coloring(g, OrderedPartition{{{0, 1}, {1, 2}}}), std::invalid_argument);
}

TEST_CASE("theorem-style ordered coloring on K_{2,2} minus an edge") {
  // Sides {0,1} and {2,3}, edge (1,3) removed: sequence V1\{u} u v V2\{v}.
  Graph g(4, {{0, 2}, {0, 3}, {1, 2}});
  OrderedPartition p{{{0}, {1}, {3}, {2}}};
  Coloring c = ordered_coloring(g, p);
  CHECK(min_color_distance(g, c) == 2);
}

TEST_CASE("ordered coloring is a bijection onto 1..n") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform(1, 12);
    Graph g = Graph::empty(n);
    // Random partition into up to 4 sets.
    OrderedPartition p;
    p.sets.assign(rng.uniform(1, 4), {});
    for (int v = 0; v < n; ++v)
      p.sets[rng.uniform(0, static_cast<int>(p.sets.size()) - 1)].push_back(v);
    Coloring c = ordered_coloring(g, p);
    std::vector<char> seen(n + 1, 0);
    for (int col : c.colors) {
      CHECK(col >= 1);
      CHECK(col <= n);
      CHECK_FALSE(seen[col]);
      seen[col] = 1;
    }
  }
}

TEST_CASE("trivial coloring hits the Lemma 1 guarantee") {
  CHECK(trivial_coloring(Graph::empty(3), 2).colors == std::vector<int>{2, 4, 6});
  CHECK(trivial_coloring(Graph::empty(1), 5).colors == std::vector<int>{5});
  Graph k4 = Graph::complete(4);
  Coloring c = trivial_coloring(k4, 3);
  CHECK(c.colors == std::vector<int>{3, 6, 9, 12});
  CHECK(min_color_distance(k4, c) == 3);

  SplitMix64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform(1, 10), k = rng.uniform(1, 4);
    Graph g = gen::graph_from_mask(n, rng.next() & gen::max_mask(n));
    CHECK(min_color_distance(g, trivial_coloring(g, k)) >= k);
  }
}

TEST_CASE("upper bound formula") {
  CHECK(upper_bound(6, 1) == 3);
  CHECK(upper_bound(6, 2) == 9);
  CHECK(upper_bound(2, 1) == 1);
  CHECK_THROWS_AS(upper_bound(1, 1), std::invalid_argument);
}

TEST_CASE("m-colorable lower bound formula") {
  CHECK(mcolorable_lower_bound(12, 2, 4) == 5);
  CHECK(mcolorable_lower_bound(9, 1, 3) == 1);
  CHECK(mcolorable_lower_bound(10, 3, 3) == 11);
  CHECK_THROWS_AS(mcolorable_lower_bound(5, 2, 1), std::invalid_argument);
}

TEST_CASE("coloring_from_proper interval layout") {
  Graph c4 = Graph::cycle(4);
  Coloring doubled = coloring_from_proper(c4, {{0, 2}, {1, 3}}, 2);
  CHECK(doubled.colors == std::vector<int>{1, 7, 2, 8});
  CHECK(min_color_distance(c4, doubled) == 5);

  Graph k2 = Graph::complete(2);
  Coloring plain = coloring_from_proper(k2, {{0}, {1}}, 1);
  CHECK(plain.colors == std::vector<int>{1, 2});
  CHECK(min_color_distance(k2, plain) == 1);

  Graph tri = Graph::complete(3);
  Coloring spread = coloring_from_proper(tri, {{0}, {1}, {2}}, 2);
  CHECK(spread.colors == std::vector<int>{1, 3, 5});
  CHECK(min_color_distance(tri, spread) == 2);
  CHECK(mcolorable_lower_bound(3, 2, 3) == 2);
}

TEST_CASE("coloring_from_proper rejects bad classes") {
  Graph c4 = Graph::cycle(4);
  CHECK_THROWS_AS(coloring_from_proper(c4, {{0, 1}, {2, 3}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_proper(c4, {{0, 2}, {1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_proper(c4, {{0, 2}, {1, 3}, {}}, 1), std::invalid_argument);
}

TEST_CASE("coloring_from_proper achieves the Lemma 3 bound") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.uniform(2, 10), k = rng.uniform(1, 3);
    Graph g = gen::random_connected(n, 0.4, rng);
    // Greedy proper coloring, then pack classes.
    std::vector<int> col(n, 0);
    int m = 0;
    for (int v = 0; v < n; ++v) {
      std::vector<char> used(n + 2, 0);
      for (int nb : g.neighbors(v))
        if (col[nb]) used[col[nb]] = 1;
      int c = 1;
      while (used[c]) ++c;
      col[v] = c;
      m = std::max(m, c);
    }
    if (m < 2) continue;
    std::vector<std::vector<int>> classes(m);
    for (int v = 0; v < n; ++v) classes[col[v] - 1].push_back(v);
    Coloring packed = coloring_from_proper(g, classes, k);
    CHECK(min_color_distance(g, packed) >= mcolorable_lower_bound(n, k, m));
  }
}

}  // TEST_SUITE

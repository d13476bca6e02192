#include "doctest.h"

#include <set>

#include "diffcolor/graph.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace diffcolor;
namespace gen = diffcolor::testgen;
namespace oracle = diffcolor::testoracle;

namespace {

std::set<Edge> edge_set(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("edge bounds gate the declared class") {
  // K_4 has 6 > 2*4-3 edges: not outerplanar-taggable, but planar is fine.
  CHECK_THROWS_AS(Graph::complete(4).with_class(GraphClass::outerplanar), std::invalid_argument);
  CHECK_NOTHROW(Graph::complete(4).with_class(GraphClass::planar));
  // K_5 has 10 > 3*5-6 edges.
  CHECK_THROWS_AS(Graph::complete(5).with_class(GraphClass::planar), std::invalid_argument);
  CHECK_NOTHROW(Graph::complete(3).with_class(GraphClass::outerplanar));
  CHECK_NOTHROW(Graph(2, {{0, 1}}, GraphClass::outerplanar));
}

TEST_CASE("complement of small graphs") {
  CHECK(edge_set(complement(Graph::cycle(4))) == std::set<Edge>{{0, 2}, {1, 3}});
  CHECK(complement(Graph::complete(4)).edge_count() == 0);
  CHECK(edge_set(complement(Graph::path(3))) == std::set<Edge>{{0, 2}});
}

TEST_CASE("complement is an involution") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = rng.uniform(1, 11);
    Graph g = gen::graph_from_mask(n, rng.next() & gen::max_mask(n));
    CHECK(edge_set(complement(complement(g))) == edge_set(g));
  }
}

TEST_CASE("join basics") {
  CHECK(edge_set(join(Graph::complete(1), Graph::complete(1))) == std::set<Edge>{{0, 1}});

  Graph j = join(Graph::empty(3), Graph::complete(3));
  CHECK(j.vertex_count() == 6);
  CHECK(j.edge_count() == 12);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) CHECK(j.has_edge(u, v));

  SplitMix64 rng(3);
  Graph g = gen::random_connected(6, 0.3, rng);
  Graph big = join(g, Graph::complete(6));
  CHECK(big.vertex_count() == 12);
  for (int u = 6; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v) CHECK(big.has_edge(u, v));
  for (int u = 0; u < 6; ++u)
    for (int v = 6; v < 12; ++v) CHECK(big.has_edge(u, v));
}

TEST_CASE("join edge count formula") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int a = rng.uniform(1, 7), b = rng.uniform(1, 7);
    Graph g = gen::graph_from_mask(a, rng.next() & gen::max_mask(a));
    Graph h = gen::graph_from_mask(b, rng.next() & gen::max_mask(b));
    CHECK(join(g, h).edge_count() == g.edge_count() + h.edge_count() + a * b);
  }
}

TEST_CASE("detect_forbidden on the named examples") {
  auto star = detect_forbidden(Graph::star(5));
  REQUIRE(star.star_center.has_value());
  CHECK(*star.star_center == 0);

  auto c4 = detect_forbidden(Graph::cycle(4));
  CHECK(c4.complete_bipartite);
  CHECK(c4.side_a == std::vector<int>{0, 2});
  CHECK(c4.side_b == std::vector<int>{1, 3});

  auto k113 = detect_forbidden(join(Graph::complete(2), Graph::empty(3)));
  REQUIRE(k113.k11_pair.has_value());
  CHECK(*k113.k11_pair == Edge{0, 1});

  auto k2n2 = detect_forbidden(Graph::complete_bipartite(2, 4));
  REQUIRE(k2n2.k2_pair.has_value());
  CHECK(*k2n2.k2_pair == Edge{0, 1});
  CHECK_FALSE(k2n2.star_center.has_value());
}

TEST_CASE("detect_forbidden matches subgraph enumeration") {
  auto check_agreement = [](const Graph& g) {
    auto rep = detect_forbidden(g);
    CHECK(rep.star_center.has_value() == oracle::brute_force_has_k1n1(g));
    if (g.vertex_count() >= 4) {
      CHECK(rep.k2_pair.has_value() == oracle::brute_force_has_k2n2(g));
      CHECK(rep.k11_pair.has_value() == oracle::brute_force_has_k11n3(g));
    }
    CHECK(rep.complete_bipartite == oracle::brute_force_complete_bipartite(g));
  };

  for (int n = 2; n <= 5; ++n)
    for (uint64_t mask = 0; mask <= gen::max_mask(n); ++mask)
      check_agreement(gen::graph_from_mask(n, mask));

  // n = 6: one representative per isomorphism class.
  std::set<uint64_t> seen;
  for (uint64_t mask = 0; mask <= gen::max_mask(6); ++mask) {
    Graph g = gen::graph_from_mask(6, mask);
    if (seen.insert(gen::canonical_mask(g)).second) check_agreement(g);
  }

  SplitMix64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    int n = rng.uniform(7, 8);
    check_agreement(gen::graph_from_mask(n, rng.next() & gen::max_mask(n)));
  }
}

TEST_CASE("find_nonadjacent_pair basics") {
  auto p5 = find_nonadjacent_pair(Graph::path(5), {0, 1}, {2, 3, 4});
  REQUIRE(p5.has_value());
  CHECK(*p5 == Edge{0, 2});

  CHECK_FALSE(find_nonadjacent_pair(Graph::complete_bipartite(2, 3), {0, 1}, {2, 3, 4}));
  CHECK_THROWS_AS(find_nonadjacent_pair(Graph::path(4), {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("grid subsets always have a non-adjacent cross pair") {
  Graph grid = Graph::grid(6, 6);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<int> pick;
    while (pick.size() < 6) pick.insert(rng.uniform(0, 35));
    std::vector<int> all(pick.begin(), pick.end());
    std::vector<int> a(all.begin(), all.begin() + 3), b(all.begin() + 3, all.end());
    auto found = find_nonadjacent_pair(grid, a, b);
    REQUIRE(found.has_value());
    // Exhaustive cross-pair scan agrees that one exists.
    bool exists = false;
    for (int u : a)
      for (int v : b)
        if (!grid.has_edge(u, v)) exists = true;
    CHECK(exists);
    CHECK_FALSE(grid.has_edge(found->first, found->second));
  }
}

TEST_CASE("outerplanar pair guarantee (K_{2,3}-freeness)") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    int n = rng.uniform(6, 14);
    Graph g = gen::random_outerplanar(n, rng.unit() * 0.5, rng);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(verts[i], verts[rng.uniform(0, i)]);
    int asz = 2 + rng.uniform(0, 1), bsz = 3 + rng.uniform(0, 1);
    std::vector<int> a(verts.begin(), verts.begin() + asz);
    std::vector<int> b(verts.begin() + asz, verts.begin() + asz + bsz);
    CHECK(find_nonadjacent_pair(g, a, b).has_value());
  }
}

TEST_CASE("planar pair guarantee (K_{3,3}-freeness)") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    int n = rng.uniform(7, 20);
    Graph g = gen::random_planar(n, rng.unit() * 0.5, rng);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(verts[i], verts[rng.uniform(0, i)]);
    std::vector<int> a(verts.begin(), verts.begin() + 3);
    std::vector<int> b(verts.begin() + 3, verts.begin() + 6);
    CHECK(find_nonadjacent_pair(g, a, b).has_value());
  }
}

TEST_CASE("connectivity and bipartition helpers") {
  CHECK(is_connected(Graph::path(5)));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph::complete(1)));

  auto sides = bipartition_of(Graph::cycle(6));
  REQUIRE(sides.has_value());
  CHECK(sides->first.size() == 3);
  CHECK_FALSE(bipartition_of(Graph::cycle(5)).has_value());
}

}  // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "ramsey/fraisse.hpp"

using namespace ramsey;

TEST_CASE("generating blocks") {
  const GridBlock g = grid_block(2, 2);
  CHECK(g.side == 3);
  CHECK(g.point_count() == 9);
  CHECK(grid_block(2, 0).point_count() == 1);

  CHECK(graph_block(3, 0).vertices == 1);
  const GraphBlock t3 = graph_block(3, 3);
  CHECK(t3.has_edge(0, 1));
  CHECK_FALSE(t3.has_edge(0, 2));
}

TEST_CASE("clique-free blocks contain no clique of the bound size") {
  for (int bound : {3, 4, 5})
    for (int i = 0; i <= 8; ++i) {
      const GraphBlock b = graph_block(bound, i);
      const int n = b.vertices;
      // Every bound-sized vertex subset misses an edge.
      std::vector<int> pick(bound);
      std::function<bool(int, int)> has_clique = [&](int pos, int start) {
        if (pos == bound) {
          for (int x = 0; x < bound; ++x)
            for (int y = x + 1; y < bound; ++y)
              if (!b.has_edge(pick[x], pick[y])) return false;
          return true;
        }
        for (int v = start; v < n; ++v) {
          pick[pos] = v;
          if (has_clique(pos + 1, v + 1)) return true;
        }
        return false;
      };
      if (n >= bound) CHECK_FALSE(has_clique(0, 0));
    }
}

TEST_CASE("edge and non-edge availability") {
  // Bound 3: both pair types from three vertices on.
  for (int i = 2; i <= 8; ++i) {
    const GraphBlock b = graph_block(3, i);
    std::set<GraphPairClass> kinds;
    for (int u = 0; u < b.vertices; ++u)
      for (int v = u + 1; v < b.vertices; ++v)
        kinds.insert(graph_pair_class(b, u, v));
    CHECK(kinds.size() == 2);
  }
  // Larger bounds need a full part cycle before a non-edge exists.
  for (int bound : {4, 5}) {
    const GraphBlock small = graph_block(bound, bound - 2);  // bound-1 vertices
    for (int u = 0; u < small.vertices; ++u)
      for (int v = u + 1; v < small.vertices; ++v)
        CHECK(small.has_edge(u, v));
    const GraphBlock big = graph_block(bound, bound - 1);  // bound vertices
    CHECK_FALSE(big.has_edge(0, bound - 1));
  }
}

TEST_CASE("pair classes inside a grid block") {
  const GridBlock b = grid_block(2, 3);
  CHECK(grid_pair_class(b, {0, 0}, {1, 1}).key() == "<<");
  CHECK(grid_pair_class(b, {0, 1}, {1, 0}).key() == "<>");
  CHECK(grid_pair_class(b, {0, 0}, {0, 2}).key() == "=<");
  CHECK(grid_pair_class(b, {1, 0}, {0, 1}) ==
        grid_pair_class(b, {0, 1}, {1, 0}));
  CHECK_THROWS_AS(grid_pair_class(b, {0, 0}, {0, 0}), Error);
  CHECK_THROWS_AS(grid_pair_class(b, {0, 0}, {5, 5}), Error);
}

TEST_CASE("stabilized pair-class counts") {
  const long long expected[] = {4, 13, 40};
  for (int dim = 2; dim <= 4; ++dim) {
    const long long got = count_pair_classes(make_space(Family::hypercube, dim));
    CHECK(got == expected[dim - 2]);
    // Both closed expressions agree with it: (3^dim - 1)/2 and the sum.
    long long power = 1;
    long long sum = 0;
    for (int i = 0; i < dim; ++i) {
      sum += power;
      power *= 3;
    }
    CHECK(got == (power - 1) / 2);
    CHECK(got == sum);
  }
  for (int bound : {3, 4, 5})
    CHECK(count_pair_classes(make_space(Family::cliquefree, bound)) == 2);
}

TEST_CASE("pair degrees assembled from the class counts") {
  CHECK(degree_bruteforce_pairs(make_space(Family::hypercube, 2)) == 5);
  CHECK(degree_bruteforce_pairs(make_space(Family::hypercube, 3)) == 14);
  CHECK(degree_bruteforce_pairs(make_space(Family::cliquefree, 3)) == 3);
}

TEST_CASE("canonical copies nest and preserve the structure") {
  // Grid: the canonical copy of block i inside block i+1 classifies pairs
  // identically (same coordinates, larger ambient block).
  for (int i = 1; i <= 4; ++i) {
    const GridBlock small = grid_block(2, i);
    const GridBlock big = grid_block(2, i + 1);
    const auto pts = small.points();
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        CHECK(grid_pair_class(small, pts[a], pts[b]) ==
              grid_pair_class(big, pts[a], pts[b]));
  }
  // Graph: initial vertex segments keep their edges.
  for (int i = 1; i <= 6; ++i) {
    const GraphBlock small = graph_block(3, i);
    const GraphBlock big = graph_block(3, i + 1);
    for (int u = 0; u < small.vertices; ++u)
      for (int v = u + 1; v < small.vertices; ++v)
        CHECK(small.has_edge(u, v) == big.has_edge(u, v));
  }
}

TEST_CASE("embedding an index set") {
  const SpaceId h2 = make_space(Family::hypercube, 2);
  const auto identity = embed_subset(h2, {0, 1, 2});
  REQUIRE(identity.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(identity[j].location == static_cast<int>(j));
    for (const auto& axis : identity[j].axis_values)
      CHECK(axis.size() == j + 1);
  }

  const auto shifted = embed_subset(h2, {0, 2, 3});
  CHECK(shifted[1].location == 2);
  CHECK(shifted[1].axis_values[0] == std::vector<int>{0, 1});

  CHECK(blockwise_contained(embed_subset(h2, {0, 2, 3}),
                            embed_subset(h2, {0, 1, 2, 3})));
  CHECK(blockwise_contained(embed_subset(h2, {1, 3}),
                            embed_subset(h2, {0, 1, 2, 3})));
  CHECK_FALSE(blockwise_contained(embed_subset(h2, {0, 2, 3}),
                                  embed_subset(h2, {0, 1, 2})));

  const SpaceId a3 = make_space(Family::cliquefree, 3);
  const auto graphs = embed_subset(a3, {1, 2, 4});
  CHECK(graphs[2].vertex_set == std::vector<int>{0, 1, 2});
  CHECK(blockwise_contained(embed_subset(a3, {1, 4}), embed_subset(a3, {1, 2, 4})));

  CHECK_THROWS_AS(embed_subset(h2, {}), Error);
  CHECK_THROWS_AS(embed_subset(h2, {1, 1}), Error);
  CHECK_THROWS_AS(embed_subset(h2, {-1, 0}), Error);
}

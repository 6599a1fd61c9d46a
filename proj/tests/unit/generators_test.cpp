#include <gtest/gtest.h>

#include "minorforge/errors.hpp"
#include "minorforge/generators.hpp"

using namespace minorforge;

TEST(Generators, Complete) {
  const Graph g = gen_complete(4);
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 6);
}

TEST(Generators, SmallGridIsASquare) {
  const Graph g = gen_grid(2, 2);
  EXPECT_EQ(g.edge_count(), 4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_EQ(gen_grid(3, 5).edge_count(), 3 * 4 + 2 * 5);
}

TEST(Generators, Hypercube) {
  const Graph g = gen_hypercube(4);
  EXPECT_EQ(g.vertex_count(), 16);
  EXPECT_EQ(g.edge_count(), 32);
  EXPECT_TRUE(g.has_edge(0b0101, 0b0111));
  EXPECT_THROW(gen_hypercube(25), InputError);
}

TEST(Generators, RandomRegularIsExactlyRegular) {
  const Graph g = gen_random_regular(10, 3, 7);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph h = gen_random_regular(200, 8, seed);
    for (Vertex v = 0; v < 200; ++v) ASSERT_EQ(h.degree(v), 8);
  }
  EXPECT_EQ(gen_random_regular(50, 4, 3), gen_random_regular(50, 4, 3));
  EXPECT_THROW(gen_random_regular(5, 3, 0), InputError);
  EXPECT_THROW(gen_random_regular(4, 4, 0), InputError);
}

TEST(Generators, GnpIsDeterministic) {
  EXPECT_EQ(gen_gnp(60, 0.1, 5), gen_gnp(60, 0.1, 5));
  EXPECT_EQ(gen_gnp(20, 0, 5).edge_count(), 0);
  EXPECT_EQ(gen_gnp(20, 1, 5).edge_count(), 190);
}

TEST(Generators, DispatchByName) {
  EXPECT_EQ(generate("grid", {{"rows", 3}, {"cols", 4}}, 0), gen_grid(3, 4));
  EXPECT_EQ(generate("random_regular", {{"n", 30}, {"d", 4}}, 2), gen_random_regular(30, 4, 2));
  EXPECT_THROW(generate("torus", nlohmann::json::object(), 0), InputError);
  EXPECT_THROW(generate("complete", nlohmann::json::object(), 0), InputError);
}

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/extraction.hpp"

using namespace minorforge;

namespace {

// d(H) >= d(G)/2 and delta(H) >= d(H)/2, by integer cross-multiplication.
void expect_postconditions(const Graph& g, const ExtractionReport& r) {
  const Graph& h = r.subgraph.graph;
  ASSERT_GT(h.vertex_count(), 0);
  const std::int64_t mg = g.edge_count(), ng = g.vertex_count();
  const std::int64_t mh = h.edge_count(), nh = h.vertex_count();
  EXPECT_GE(2 * mh * ng, mg * nh);
  EXPECT_GE(static_cast<std::int64_t>(min_degree(h)) * nh, mh);
}

}  // namespace

TEST(Peel, RemovesThePendant) {
  const Subgraph s = peel_min_degree(fixtures::k4_plus_pendant(), Rational(1, 2));
  EXPECT_EQ(s.graph, fixtures::complete(4));
  EXPECT_EQ(s.original_ids, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Peel, FixedPoints) {
  EXPECT_EQ(peel_min_degree(fixtures::complete(4), Rational(1, 2)).graph, fixtures::complete(4));
  EXPECT_EQ(peel_min_degree(fixtures::star(5), Rational(1, 2)).graph, fixtures::star(5));
}

TEST(Peel, HalfFactorKeepsDensity) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = fixtures::random_graph(30, 0.15, rng);
    if (g.edge_count() == 0) continue;
    const Subgraph s = peel_min_degree(g, Rational(1, 2));
    ASSERT_GT(s.graph.vertex_count(), 0);
    EXPECT_GE(average_degree(s.graph), average_degree(g));
    EXPECT_GE(Rational(2 * min_degree(s.graph)), average_degree(s.graph));
  }
}

TEST(Extract, PassingGraphIsOnlyPeeled) {
  const Graph g = fixtures::complete(12);
  const ExtractionReport r = extract_expander(g, RhoParams{.eps1 = 0.01, .t = 4, .log_base = 2});
  EXPECT_TRUE(r.success);
  EXPECT_LE(r.iterations, 1);
  EXPECT_EQ(r.subgraph.graph, g);
  EXPECT_EQ(r.avg_degree_ratio, Rational(1));
}

TEST(Extract, TwoCliquesWithLargeEps1KeepOneClique) {
  const Graph g = fixtures::two_cliques_bridge(20);
  const ExtractionReport r = extract_expander(g, RhoParams{.eps1 = 1, .t = 4, .log_base = 2});
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.subgraph.graph, fixtures::complete(20));
  expect_postconditions(g, r);
}

TEST(Extract, TwoCliquesWithSmallEps1AlreadyExpand) {
  // At eps1 = 0.05 the edge budget at |X| = 20 is about 0.1, below the single bridge.
  const Graph g = fixtures::two_cliques_bridge(20);
  const ExtractionReport r = extract_expander(g, RhoParams{.eps1 = 0.05, .t = 4, .log_base = 2});
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.subgraph.graph.vertex_count(), 40);
}

TEST(Extract, SingleEdge) {
  const ExtractionReport r = extract_expander(fixtures::complete(2), RhoParams{.eps1 = 0.1, .t = 4, .log_base = 2});
  EXPECT_TRUE(r.success);
  EXPECT_EQ(r.subgraph.graph, fixtures::complete(2));
}

TEST(Extract, EdgelessGraphHasZeroRatio) {
  const ExtractionReport r = extract_expander(fixtures::empty(5), RhoParams{});
  EXPECT_EQ(r.avg_degree_ratio, Rational(0));
  EXPECT_THROW(extract_expander(fixtures::empty(0), RhoParams{}), InputError);
}

TEST(Extract, PostconditionsOnRandomGraphs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = fixtures::random_connected(40 + static_cast<Vertex>(rng() % 40), 0.08, rng);
    const ExtractionReport r = extract_expander(g, RhoParams{.eps1 = 0.5, .t = 4, .log_base = 2});
    if (r.success) expect_postconditions(g, r);
    for (std::size_t i = 1; i < r.subgraph.original_ids.size(); ++i)
      EXPECT_LT(r.subgraph.original_ids[i - 1], r.subgraph.original_ids[i]);
    for (const Edge& e : r.subgraph.graph.edges())
      EXPECT_TRUE(g.has_edge(r.subgraph.original_ids[e.u], r.subgraph.original_ids[e.v]));
  }
}

TEST(Calibrate, CompleteGraphBeatsBridgedCliques) {
  const double k16 = calibrate_eps1(fixtures::complete(16), 4);
  const double bridged = calibrate_eps1(fixtures::two_cliques_bridge(8), 4);
  EXPECT_GE(k16, 0.01);
  EXPECT_LT(bridged, k16);
}

TEST(Calibrate, CycleReachesTheCap) {
  // Below one edge of adversary budget at every |X|, so no eps1 in range fails.
  EXPECT_EQ(calibrate_eps1(fixtures::cycle(16), 4), 1.0);
}

TEST(Calibrate, EdgelessIsZero) { EXPECT_EQ(calibrate_eps1(fixtures::empty(6), 4), 0.0); }

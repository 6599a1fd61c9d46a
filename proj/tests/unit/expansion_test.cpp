#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/expansion.hpp"
#include "oracles.hpp"

using namespace minorforge;

namespace {

std::vector<Vertex> ids(const VertexSet& s) { return {s.begin(), s.end()}; }

// Dyadic values, so the double parameters equal the oracle's rationals.
const double kEps[] = {0.25, 0.5, 0.75, 1.0, 1.5};

}  // namespace

TEST(Rho, ZeroBelowThreshold) {
  const RhoParams p{.eps1 = 0.01, .t = 30, .log_base = 2};
  EXPECT_EQ(rho(30.0 / 6, p), 0.0);
  EXPECT_EQ(rho(5.999, p), 0.0);
}

TEST(Rho, BoundaryValue) {
  const RhoParams p{.eps1 = 0.01, .t = 30, .log_base = 2};
  const double expected = 0.01 / std::pow(std::log2(3.0), 2);
  EXPECT_DOUBLE_EQ(rho(6, p), expected);
  EXPECT_NEAR(rho(6, p), 0.003980, 1e-6);
}

TEST(Rho, Decreasing) {
  const RhoParams p{.eps1 = 0.1, .t = 8, .log_base = 2};
  EXPECT_GT(rho(8, p), rho(16, p));
}

TEST(Rho, RejectsBadParameters) {
  EXPECT_THROW((RhoParams{.eps1 = 0, .t = 1, .log_base = 2}.validate()), InputError);
  EXPECT_THROW((RhoParams{.eps1 = 1, .t = -1, .log_base = 2}.validate()), InputError);
  EXPECT_THROW((RhoParams{.eps1 = 1, .t = 1, .log_base = 1}.validate()), InputError);
  EXPECT_THROW(check_robust_expander(fixtures::cycle(6), RhoParams{.eps1 = 0, .t = 1, .log_base = 2}), InputError);
}

TEST(VertexExpansion, CompleteGraphPasses) {
  const Verdict v = check_vertex_expansion(fixtures::complete(8), 1.0);
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.exactness, Exactness::exact);
}

TEST(VertexExpansion, CycleFailsOnAnArc) {
  const Verdict v = check_vertex_expansion(fixtures::cycle(8), 0.6);
  ASSERT_FALSE(v.passed);
  ASSERT_TRUE(v.witness);
  const VertexSet& w = *v.witness;
  EXPECT_LE(w.size(), 4u);
  EXPECT_LT(static_cast<double>(neighborhood(fixtures::cycle(8), w).size()), 0.6 * static_cast<double>(w.size()));
  EXPECT_TRUE(check_vertex_expansion(fixtures::cycle(8), 0.5).passed);
}

TEST(VertexExpansion, SingleEdge) { EXPECT_TRUE(check_vertex_expansion(fixtures::complete(2), 1.0).passed); }

TEST(VertexExpansion, FalsifierFindsTheBridgeCut) {
  const Graph g = fixtures::two_cliques_bridge(20);
  const Verdict v = check_vertex_expansion(g, 0.5);
  ASSERT_FALSE(v.passed);
  EXPECT_EQ(v.exactness, Exactness::heuristic);
  const VertexSet& w = *v.witness;
  EXPECT_LE(w.size(), 20u);
  EXPECT_LT(static_cast<double>(neighborhood(g, w).size()), 0.5 * static_cast<double>(w.size()));
}

TEST(VertexExpansion, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 4 + static_cast<Vertex>(rng() % 9);
    const Graph g = fixtures::random_graph(n, 0.2 + 0.1 * static_cast<double>(trial % 5), rng);
    for (double eps : kEps) {
      const auto as_rational = Rational(static_cast<std::int64_t>(eps * 4), 4);
      const Verdict v = check_vertex_expansion(g, eps);
      EXPECT_EQ(v.passed, oracle::vertex_expansion(g, as_rational)) << "n=" << n << " eps=" << eps;
      if (!v.passed) {
        const VertexSet& w = *v.witness;
        EXPECT_LT(static_cast<double>(neighborhood(g, w).size()), eps * static_cast<double>(w.size()));
      }
    }
  }
}

TEST(TAlphaExpanding, CompleteGraphPasses) {
  EXPECT_TRUE(check_t_alpha_expanding(fixtures::complete(10), 2, 0.5).passed);
}

TEST(TAlphaExpanding, CycleFailsOnAnArc) {
  const Graph g = fixtures::cycle(12);
  const Verdict v = check_t_alpha_expanding(g, 3, 0.9);
  ASSERT_FALSE(v.passed);
  const VertexSet& w = *v.witness;
  EXPECT_LE(w.size(), 3u);
  EXPECT_LT(neighborhood(g, w).size(), 3 * w.size());
}

TEST(TAlphaExpanding, EmptyRangeIsVacuous) {
  const Verdict v = check_t_alpha_expanding(fixtures::path(5), 10, 0.5);
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.checked_subsets, 0u);
}

TEST(TAlphaExpanding, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(22);
  const std::pair<int, double> params[] = {{1, 0.5}, {2, 0.5}, {2, 0.875}, {3, 0.75}, {1, 0.875}};
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 4 + static_cast<Vertex>(rng() % 9);
    const Graph g = fixtures::random_graph(n, 0.3 + 0.1 * static_cast<double>(trial % 5), rng);
    for (const auto& [t, alpha] : params) {
      const bool expected =
          oracle::t_alpha_expanding(g, Rational(t), Rational(static_cast<std::int64_t>(alpha * 8), 8));
      EXPECT_EQ(check_t_alpha_expanding(g, t, alpha).passed, expected) << "n=" << n << " t=" << t;
    }
  }
}

TEST(LocallySparse, EdgelessPasses) { EXPECT_TRUE(check_locally_sparse(fixtures::empty(10), 0.3).passed); }

TEST(LocallySparse, CompleteGraphPassesUpToEpsOne) {
  // K10: a set of size s <= 10 eps has d(G[U]) = s - 1 <= 10 eps - 1 <= 9 eps.
  for (double eps : {0.25, 0.4, 0.5, 0.75, 1.0}) {
    EXPECT_TRUE(check_locally_sparse(fixtures::complete(10), eps).passed) << eps;
    EXPECT_EQ(oracle::locally_sparse(fixtures::complete(10), Rational(static_cast<std::int64_t>(eps * 20), 20)),
              true);
  }
}

TEST(LocallySparse, PrismFailsOnATriangle) {
  const Graph g = fixtures::prism();
  const Verdict v = check_locally_sparse(g, 0.5);
  ASSERT_FALSE(v.passed);
  const VertexSet& w = *v.witness;
  EXPECT_LE(w.size(), 3u);
  EXPECT_GT(2 * internal_edge_count(g, w), static_cast<std::int64_t>(1.5 * static_cast<double>(w.size())));
  EXPECT_FALSE(oracle::locally_sparse(g, Rational(1, 2)));
}

TEST(LocallySparse, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 4 + static_cast<Vertex>(rng() % 9);
    const Graph g = fixtures::random_graph(n, 0.3 + 0.1 * static_cast<double>(trial % 5), rng);
    for (double eps : {0.25, 0.5, 0.75}) {
      const bool expected = oracle::locally_sparse(g, Rational(static_cast<std::int64_t>(eps * 4), 4));
      EXPECT_EQ(check_locally_sparse(g, eps).passed, expected) << "n=" << n << " eps=" << eps;
    }
  }
}

TEST(RobustExpander, EmptyRangeIsVacuous) {
  EXPECT_TRUE(check_robust_expander(fixtures::path(3), RhoParams{.eps1 = 1, .t = 8, .log_base = 2}).passed);
}

TEST(RobustExpander, CycleWithTinyEps1Passes) {
  // rho(8) * 8 * d(G) is below one, so the adversary cannot delete any edge.
  EXPECT_TRUE(check_robust_expander(fixtures::cycle(16), RhoParams{.eps1 = 0.1, .t = 4, .log_base = 2}).passed);
}

TEST(RobustExpander, CycleWithLargeEps1FailsOnAnArc) {
  const Graph g = fixtures::cycle(16);
  const Verdict v = check_robust_expander(g, RhoParams{.eps1 = 4, .t = 4, .log_base = 2});
  ASSERT_FALSE(v.passed);
  ASSERT_TRUE(v.witness);
  ASSERT_TRUE(v.witness_edges);
  const VertexSet& x = *v.witness;
  EXPECT_GE(x.size(), 2u);
  EXPECT_LE(x.size(), 8u);
  const Graph cut = delete_edges(g, *v.witness_edges);
  const double r = rho(static_cast<double>(x.size()), RhoParams{.eps1 = 4, .t = 4, .log_base = 2});
  EXPECT_LT(static_cast<double>(neighborhood(cut, x).size()), r * static_cast<double>(x.size()));
  EXPECT_LE(static_cast<double>(v.witness_edges->size()), 2.0 * r * static_cast<double>(x.size()));
}

TEST(RobustExpander, CompleteGraphPasses) {
  EXPECT_TRUE(check_robust_expander(fixtures::complete(16), RhoParams{.eps1 = 0.01, .t = 4, .log_base = 2}).passed);
}

TEST(RobustExpander, MatchesEdgeEnumeratingOracle) {
  std::mt19937_64 rng(24);
  const RhoParams params[] = {{.eps1 = 0.5, .t = 2, .log_base = 2},
                              {.eps1 = 2, .t = 3, .log_base = 2},
                              {.eps1 = 4, .t = 4, .log_base = 2}};
  for (int trial = 0; trial < 30; ++trial) {
    const Vertex n = 4 + static_cast<Vertex>(rng() % 5);
    const Graph g = fixtures::random_connected(n, 0.25, rng);
    for (const RhoParams& p : params) {
      EXPECT_EQ(check_robust_expander(g, p).passed, oracle::robust_expander(g, p.eps1, p.t, p.log_base))
          << "n=" << n << " eps1=" << p.eps1;
    }
  }
}

TEST(ExpansionConstant, Examples) {
  EXPECT_EQ(vertex_expansion_constant(fixtures::complete(4)), Rational(1));
  EXPECT_EQ(vertex_expansion_constant(fixtures::cycle(8)), Rational(1, 2));
  EXPECT_EQ(vertex_expansion_constant(fixtures::complete(2)), Rational(1));
  EXPECT_THROW(vertex_expansion_constant(fixtures::cycle(21)), CapabilityError);
}

TEST(ExpansionConstant, MatchesOracle) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = fixtures::random_graph(2 + static_cast<Vertex>(rng() % 11), 0.4, rng);
    EXPECT_EQ(vertex_expansion_constant(g), oracle::expansion_constant(g));
  }
}

TEST(NonexpandingSet, FindsAnIsolatedVertex) {
  const Graph g = fixtures::make(5, {{0, 1}, {1, 2}, {2, 3}});
  const auto w = find_nonexpanding_set(g, 0.5, 10, 2, SearchBudget{});
  ASSERT_TRUE(w);
  EXPECT_EQ(ids(*w), (std::vector<Vertex>{4}));
}

TEST(NonexpandingSet, NothingInsideAClique) {
  EXPECT_FALSE(find_nonexpanding_set(fixtures::complete(8), 0.5, 10, 4, SearchBudget{}));
}

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "minorforge/builder.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/generators.hpp"
#include "oracles.hpp"

using namespace minorforge;

namespace {

std::vector<Vertex> ids(const VertexSet& s) { return {s.begin(), s.end()}; }

BuilderConfig config(double eps, int c, std::optional<std::int64_t> target = std::nullopt) {
  BuilderConfig cfg;
  cfg.eps = eps;
  cfg.polylog_exp = c;
  cfg.target_k = target;
  return cfg;
}

void expect_valid(const Graph& g, const MinorCertificate& cert) {
  EXPECT_EQ(cert.k, static_cast<std::int64_t>(cert.branch_sets.size()));
  EXPECT_TRUE(verify_certificate(g, cert).valid);
  EXPECT_TRUE(oracle::clique_minor_valid(g, cert.branch_sets));
}

}  // namespace

TEST(BuilderConfig, ValidationRejectsOutOfRange) {
  EXPECT_THROW(config(0, 1).validate(), ParameterError);
  EXPECT_THROW(config(1, 1).validate(), ParameterError);
  EXPECT_THROW(config(0.3, 0).validate(), ParameterError);
  EXPECT_THROW(config(0.3, 1, 0).validate(), ParameterError);
  BuilderConfig cfg;
  cfg.log_base = 1;
  EXPECT_THROW(cfg.validate(), ParameterError);
  EXPECT_NO_THROW(BuilderConfig{}.validate());
}

TEST(BuilderConfig, JsonRoundTrip) {
  BuilderConfig cfg = config(0.25, 2, 7);
  cfg.t = 12;
  cfg.seed = 99;
  cfg.budget.ball_roots = 5;
  const BuilderConfig back = builder_config_from_json(to_json(cfg));
  EXPECT_EQ(to_json(back), to_json(cfg));
  EXPECT_EQ(builder_config_from_json(nlohmann::json::object()).polylog_exp, 10);
  EXPECT_THROW(builder_config_from_json({{"epsilon", 0.2}}), InputError);
  EXPECT_THROW(builder_config_from_json({{"eps", "big"}}), InputError);
}

TEST(DeriveParameters, VacuousAtDeskScaleClampsToThree) {
  const Parameters p = derive_parameters(1'000'000, 100, config(0.3, 10));
  EXPECT_EQ(p.k, 3);
  EXPECT_EQ(p.b, 1);
  EXPECT_EQ(p.q, 3);
}

TEST(DeriveParameters, TargetKWithSmallExponent) {
  const Parameters p = derive_parameters(1000, 10, config(0.3, 1, 5));
  EXPECT_EQ(p.k, 5);
  EXPECT_EQ(p.b, 1);
}

TEST(DeriveParameters, ExponentOneGivesLargerSets) {
  // sqrt(6400*8)/log2(6400) = 226.3/12.64, so k = 17 and b = floor(0.09*6400/(17*12.64)) = 2.
  const Parameters p = derive_parameters(6400, 8, config(0.3, 1));
  EXPECT_EQ(p.k, 17);
  EXPECT_EQ(p.b, 2);
}

TEST(DeriveParameters, DegenerateInputs) {
  EXPECT_THROW(derive_parameters(2, 1, config(0.3, 10)), InputError);
  EXPECT_THROW(derive_parameters(1, 1, config(0.3, 10)), InputError);
  EXPECT_THROW(derive_parameters(100, 0, config(0.3, 10)), InputError);
  EXPECT_THROW(derive_parameters(10, 3, config(0.3, 1, 11)), ParameterError);
}

TEST(GrowBranchSet, SingleVertexIsTheBestConnected) {
  const Graph g = fixtures::k4_plus_pendant();
  const GrowthResult r = grow_branch_set(g, VertexSet::all(5), 1, 0);
  EXPECT_EQ(ids(r.set), (std::vector<Vertex>{0}));
  EXPECT_EQ(r.neighborhood, 4);
  EXPECT_TRUE(r.ok);
}

TEST(GrowBranchSet, CompleteGraph) {
  const GrowthResult r = grow_branch_set(fixtures::complete(10), VertexSet::all(10), 3, 7);
  EXPECT_EQ(r.set.size(), 3u);
  EXPECT_EQ(r.neighborhood, 7);
  EXPECT_TRUE(r.ok);
}

TEST(GrowBranchSet, StarReportsShortfall) {
  const GrowthResult r = grow_branch_set(fixtures::star(9), VertexSet::all(10), 2, 9);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.neighborhood, 8);
  EXPECT_TRUE(r.set.contains(0));
  EXPECT_EQ(r.set.size(), 2u);
}

TEST(GrowBranchSet, StaysInsideTheReservoirAndConnected) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = fixtures::random_connected(30, 0.1, rng);
    VertexSet u(30);
    for (Vertex v = 0; v < 30; ++v)
      if (rng() % 4 != 0) u.insert(v);
    if (u.size() < 4) continue;
    const GrowthResult r = grow_branch_set(g, u, 4, 0);
    for (Vertex v : r.set) EXPECT_TRUE(u.contains(v));
    EXPECT_TRUE(is_connected_subset(g, r.set));
    EXPECT_EQ(r.neighborhood, static_cast<std::int64_t>(neighborhood(g, r.set).size()));
  }
  EXPECT_THROW(grow_branch_set(fixtures::complete(5), VertexSet(5, {0, 1}), 3, 0), InputError);
}

TEST(ExtendBranchSet, KeepsTheStart) {
  const Graph g = fixtures::path(6);
  const GrowthResult r = extend_branch_set(g, VertexSet::all(6), VertexSet(6, {2}), 3, 0);
  EXPECT_EQ(r.set.size(), 3u);
  EXPECT_TRUE(r.set.contains(2));
  EXPECT_TRUE(is_connected_subset(g, r.set));
}

TEST(Carve, ZeroCapIsEmpty) {
  EXPECT_TRUE(carve_nonexpanding(fixtures::path(10), VertexSet::all(10), 0.5, 0, SearchBudget{}).empty());
}

TEST(Carve, CliqueHasNothingToCarve) {
  EXPECT_TRUE(carve_nonexpanding(fixtures::complete(24), VertexSet::all(24), 0.5, 12, SearchBudget{}).empty());
}

TEST(Carve, IsolatedVertexIsCarved) {
  const Graph g = fixtures::make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  const VertexSet carved = carve_nonexpanding(g, VertexSet(6, {0, 2, 3, 4, 5}), 0.5, 3, SearchBudget{});
  EXPECT_TRUE(carved.contains(0));
  EXPECT_LE(carved.size(), 3u);
}

TEST(Hitting, CycleTargets) {
  const Graph g = fixtures::cycle(12);
  const std::vector<VertexSet> targets{VertexSet(12, {0}), VertexSet(12, {4}), VertexSet(12, {8})};
  std::mt19937_64 rng(1);
  const VertexSet hub = hitting_connector(g, VertexSet::all(12), targets, BuilderConfig{}, rng);
  EXPECT_TRUE(is_connected_subset(g, hub));
  for (const VertexSet& t : targets) EXPECT_TRUE(hub.contains(*t.begin()));
  EXPECT_LE(hub.size(), 12u);
}

TEST(Hitting, SingleTargetIsOneVertex) {
  const std::vector<VertexSet> targets{VertexSet(12, {5, 6})};
  std::mt19937_64 rng(2);
  const VertexSet hub = hitting_connector(fixtures::cycle(12), VertexSet::all(12), targets, BuilderConfig{}, rng);
  EXPECT_EQ(hub.size(), 1u);
  EXPECT_TRUE(targets[0].contains(*hub.begin()));
}

TEST(Hitting, UnreachableTargetIsNamed) {
  const Graph g = fixtures::make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  const std::vector<VertexSet> targets{VertexSet(6, {0}), VertexSet(6, {5})};
  std::mt19937_64 rng(3);
  try {
    hitting_connector(g, VertexSet::all(6), targets, BuilderConfig{}, rng);
    FAIL();
  } catch (const HittingFailure& e) {
    EXPECT_LT(e.target(), 2u);
  }
}

TEST(SelectFamily, PicksPairwiseAdjacentSets) {
  const Graph g = fixtures::cycle(6);
  const std::vector<VertexSet> sets{VertexSet(6, {0}), VertexSet(6, {1}), VertexSet(6, {3})};
  const auto family = select_clique_family(g, sets);
  EXPECT_EQ(family.size(), 2u);
  const std::vector<VertexSet> overlapping{VertexSet(6, {0, 1}), VertexSet(6, {1})};
  EXPECT_THROW(select_clique_family(g, overlapping), InputError);
}

TEST(BuildMinor, CompleteGraphWithTarget) {
  const Graph g = fixtures::complete(20);
  const MinorCertificate cert = build_minor(g, config(0.3, 10, 20));
  EXPECT_EQ(cert.k, 20);
  for (const auto& set : cert.branch_sets) EXPECT_EQ(set.size(), 1u);
  expect_valid(g, cert);
}

TEST(BuildMinor, CompleteGraphWithoutTarget) {
  for (Vertex n : {3, 5, 10}) {
    const Graph g = fixtures::complete(n);
    const MinorCertificate cert = build_minor(g, BuilderConfig{});
    EXPECT_EQ(cert.k, n);
    expect_valid(g, cert);
  }
}

TEST(BuildMinor, GridIsPlanar) {
  const Graph g = gen_grid(10, 10);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    BuilderConfig cfg = config(0.3, 1);
    cfg.seed = seed;
    const MinorCertificate cert = build_minor(g, cfg);
    EXPECT_LE(cert.k, 4);
    expect_valid(g, cert);
  }
}

TEST(BuildMinor, RandomRegularReachesFive) {
  const Graph g = gen_random_regular(500, 8, 1);
  BuilderConfig cfg = config(0.3, 1);
  cfg.seed = 1;
  const MinorCertificate cert = build_minor(g, cfg);
  EXPECT_GE(cert.k, 5);
  expect_valid(g, cert);
}

TEST(BuildMinor, Deterministic) {
  const Graph g = gen_random_regular(300, 6, 4);
  BuilderConfig cfg = config(0.3, 1);
  cfg.seed = 17;
  const MinorCertificate a = build_minor(g, cfg);
  const MinorCertificate b = build_minor(g, cfg);
  EXPECT_EQ(a.branch_sets, b.branch_sets);
  EXPECT_EQ(a.provenance, b.provenance);
}

TEST(BuildMinor, RejectsBadInputs) {
  EXPECT_THROW(build_minor(fixtures::complete(2), BuilderConfig{}), InputError);
  EXPECT_THROW(build_minor(fixtures::make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}), BuilderConfig{}), InputError);
  EXPECT_THROW(build_minor(fixtures::complete(5), config(1.5, 1)), ParameterError);
}

TEST(BuildMinor, ProvenanceRecordsStages) {
  const MinorCertificate cert = build_minor(fixtures::petersen(), BuilderConfig{});
  EXPECT_EQ(cert.provenance.at("method"), "build_minor");
  EXPECT_TRUE(cert.provenance.at("stages").is_array());
  EXPECT_EQ(cert.provenance.at("stages").front().at("stage"), "extract");
}

TEST(BuildMinor, InvariantsHoldAtEveryCheckpoint) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = gen_random_regular(200 + 50 * trial, 4 + 2 * (trial % 3), rng());
    BuilderConfig cfg = config(0.3, 1);
    cfg.seed = static_cast<std::uint64_t>(trial);
    int calls = 0;
    bool expanding = false;
    bool expanding_known = false;
    build_minor(g, cfg, [&](std::string_view, const Graph& h, const BuilderState& st) {
      ++calls;
      const Vertex n = h.vertex_count();
      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      std::int64_t branch_total = 0;
      for (const VertexSet& b : st.B) {
        EXPECT_TRUE(is_connected_subset(h, b));
        branch_total += static_cast<std::int64_t>(b.size());
        for (Vertex v : b) ++seen[v];
      }
      for (Vertex v : st.D) ++seen[v];
      for (Vertex v : st.U) ++seen[v];
      for (int c : seen) EXPECT_EQ(c, 1);
      const auto dump = static_cast<double>(st.D.size());
      if (!st.D.empty()) {
        const auto reach = static_cast<double>(set_intersection(neighborhood(h, st.D), st.U).size());
        EXPECT_LT(10 * reach, cfg.eps * dump);
      }
      EXPECT_LE(cfg.eps * dump, 2.0 * static_cast<double>(branch_total));
      if (!expanding_known) {
        expanding = check_vertex_expansion(h, cfg.eps).passed;
        expanding_known = true;
      }
      if (expanding) EXPECT_LE(9 * cfg.eps * dump, 10.0 * static_cast<double>(branch_total));
    });
    EXPECT_GT(calls, 0);
  }
}

TEST(BuildMinor, BestOfSeedsIsMonotone) {
  const Graph g = gen_random_regular(200, 6, 9);
  std::int64_t best = 0;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    BuilderConfig cfg = config(0.3, 1);
    cfg.seed = seed;
    const std::int64_t next = std::max(best, build_minor(g, cfg).k);
    EXPECT_GE(next, best);
    best = next;
  }
  EXPECT_GE(best, 3);
}

TEST(Baseline, Examples) {
  const Graph k6 = fixtures::complete(6);
  EXPECT_EQ(baseline_random_contraction(k6, 6, 0).k, 6);
  EXPECT_EQ(baseline_random_contraction(fixtures::path(4), 2, 0).k, 2);
  const MinorCertificate c9 = baseline_random_contraction(fixtures::cycle(9), 3, 0);
  EXPECT_EQ(c9.k, 3);
  expect_valid(fixtures::cycle(9), c9);
  EXPECT_THROW(baseline_random_contraction(fixtures::path(4), 5, 0), InputError);
}

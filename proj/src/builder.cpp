#include "minorforge/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "minorforge/connectors.hpp"
#include "minorforge/extraction.hpp"
#include "minorforge/rational.hpp"

namespace minorforge {

namespace {

constexpr int kConnectRounds = 8;

nlohmann::json set_json(const VertexSet& s) { return std::vector<Vertex>(s.begin(), s.end()); }

std::int64_t total_size(const std::vector<VertexSet>& sets) {
  std::int64_t total = 0;
  for (const VertexSet& s : sets) total += static_cast<std::int64_t>(s.size());
  return total;
}

[[noreturn]] void fail(const std::string& what, const BuilderState& s) {
  throw InvariantViolation("builder invariant violated: " + what + "; state: " + to_json(s).dump());
}

// Largest x >= 0 with x <= eps*n and eps*(|D| + x) <= 2|B|.
std::int64_t carve_cap(double eps, std::int64_t n, std::int64_t dump, std::int64_t branch) {
  auto x = static_cast<std::int64_t>(std::floor(eps * static_cast<double>(n)));
  while (x > 0 && compare_scaled(x, eps, n) > 0) --x;
  auto y = static_cast<std::int64_t>(std::floor(2.0 * static_cast<double>(branch) / eps)) - dump + 1;
  while (y > 0 && compare_scaled(2 * branch, eps, dump + y) < 0) --y;
  return std::max<std::int64_t>(0, std::min(x, y));
}

std::size_t max_path_length(double eps1, double n, double t, double base) {
  const double lg = std::max(1.0, std::log(15.0 * n / t) / std::log(base));
  const double len = std::ceil(lg * lg * lg / eps1);
  return static_cast<std::size_t>(std::clamp(len, 1.0, std::max(1.0, n)));
}

nlohmann::json verdict_json(const Verdict& v) {
  return {{"passed", v.passed}, {"exactness", to_string(v.exactness)}, {"checked_subsets", v.checked_subsets}};
}

// Moves D-vertices with the most U-neighbors back to U until
// 10 |N(D) ∩ U| < eps |D| or D is empty. Returns the number of moves.
int repair_dump(const Graph& h, BuilderState& st, double eps) {
  int moves = 0;
  while (!st.D.empty()) {
    const auto boundary = static_cast<std::int64_t>(neighborhood_size_within(h, st.D, st.U));
    if (compare_scaled(10 * boundary, eps, static_cast<std::int64_t>(st.D.size())) < 0) break;
    Vertex pick = -1;
    std::int32_t best = -1;
    for (Vertex v : st.D) {
      std::int32_t into = 0;
      for (Vertex w : h.neighbors(v))
        if (st.U.contains(w)) ++into;
      if (into > best) {
        best = into;
        pick = v;
      }
    }
    st.D.erase(pick);
    st.U.insert(pick);
    ++moves;
  }
  return moves;
}

// Half the branch-set size the parameters call for on G itself.
double default_t(const Graph& g, const BuilderConfig& cfg) {
  try {
    const auto d = static_cast<std::int64_t>(std::floor(average_degree(g).to_double()));
    return static_cast<double>(derive_parameters(g.vertex_count(), d, cfg).b) / 2.0;
  } catch (const InputError&) {
    return 0.5;
  }
}

// Appends every vertex outside all sets that touches each chosen set as a
// new singleton, in ascending id order.
std::vector<VertexSet> extend_with_singletons(const Graph& h, const std::vector<VertexSet>& sets,
                                              const std::vector<std::size_t>& family) {
  const Vertex n = h.vertex_count();
  std::vector<std::int64_t> owner(static_cast<std::size_t>(n), -2);
  for (const VertexSet& s : sets)
    for (Vertex v : s) owner[v] = -1;
  std::vector<VertexSet> chosen;
  for (std::size_t i : family) {
    for (Vertex v : sets[i]) owner[v] = static_cast<std::int64_t>(chosen.size());
    chosen.push_back(sets[i]);
  }
  std::vector<std::uint8_t> hit;
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] != -2) continue;
    hit.assign(chosen.size(), 0);
    std::size_t touched = 0;
    for (Vertex w : h.neighbors(v))
      if (owner[w] >= 0 && !hit[owner[w]]) {
        hit[owner[w]] = 1;
        ++touched;
      }
    if (touched < chosen.size()) continue;
    owner[v] = static_cast<std::int64_t>(chosen.size());
    chosen.push_back(VertexSet(n, {v}));
  }
  return chosen;
}

}  // namespace

nlohmann::json to_json(const BuilderState& s) {
  nlohmann::json branch = nlohmann::json::array();
  for (const VertexSet& b : s.B) branch.push_back(set_json(b));
  return {{"B", branch}, {"D", set_json(s.D)}, {"U", set_json(s.U)}, {"bad", s.bad}, {"b", s.b}, {"q", s.q}};
}

std::vector<std::size_t> compute_bad(const Graph& h, const BuilderState& s, double eps, std::int64_t d) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < s.B.size(); ++i) {
    const auto reach = static_cast<std::int64_t>(neighborhood_size_within(h, s.B[i], s.U));
    if (compare_scaled(10 * reach, eps, s.b * d) < 0) bad.push_back(i);
  }
  return bad;
}

void check_state_invariants(const Graph& h, const BuilderState& s, double eps, std::int64_t d) {
  const Vertex n = h.vertex_count();
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const VertexSet& b : s.B)
    for (Vertex v : b) ++hits[v];
  for (Vertex v : s.D) ++hits[v];
  for (Vertex v : s.U) ++hits[v];
  for (Vertex v = 0; v < n; ++v)
    if (hits[v] != 1) fail("vertex " + std::to_string(v) + " covered " + std::to_string(hits[v]) + " times", s);
  for (std::size_t i = 0; i < s.B.size(); ++i)
    if (!is_connected_subset(h, s.B[i])) fail("branch set " + std::to_string(i) + " is not connected", s);
  if (!s.D.empty()) {
    const auto boundary = static_cast<std::int64_t>(neighborhood_size_within(h, s.D, s.U));
    if (compare_scaled(10 * boundary, eps, static_cast<std::int64_t>(s.D.size())) >= 0)
      fail("|N(D) ∩ U| = " + std::to_string(boundary) + " is not below eps/10 |D|", s);
  }
  if (compare_scaled(2 * total_size(s.B), eps, static_cast<std::int64_t>(s.D.size())) < 0)
    fail("|D| exceeds 2/eps |B|", s);
  if (compute_bad(h, s, eps, d) != s.bad) fail("stored bad set is stale", s);
}

MinorCertificate build_minor(const Graph& g, const BuilderConfig& cfg, const BuildObserver& observer) {
  cfg.validate();
  if (g.vertex_count() < 3) throw InputError("build_minor needs at least 3 vertices");
  if (!is_connected(g)) throw InputError("build_minor needs a connected graph");

  const double t = cfg.t ? *cfg.t : default_t(g, cfg);
  const RhoParams rho_params{cfg.eps1, t, cfg.log_base};
  SearchBudget budget = cfg.budget;
  budget.seed = cfg.seed;

  nlohmann::json stages = nlohmann::json::array();
  const ExtractionReport extraction = extract_expander(g, rho_params, budget);
  const Graph& h = extraction.subgraph.graph;
  const auto& to_host = extraction.subgraph.original_ids;
  const Vertex nh = h.vertex_count();
  stages.push_back({{"stage", "extract"},
                    {"n", nh},
                    {"m", h.edge_count()},
                    {"success", extraction.success},
                    {"iterations", extraction.iterations},
                    {"avg_degree_ratio", extraction.avg_degree_ratio.to_string()},
                    {"verdict", verdict_json(extraction.expander_verdict)}});

  const std::int64_t delta = nh > 0 ? min_degree(h) : 0;
  const std::int64_t avg = nh > 0 ? static_cast<std::int64_t>(std::floor(average_degree(h).to_double())) : 0;
  std::mt19937_64 rng(cfg.seed);

  std::vector<std::vector<Vertex>> best;
  std::optional<std::int64_t> k_override = cfg.target_k;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    BuilderConfig acfg = cfg;
    acfg.target_k = k_override;
    Parameters par;
    try {
      par = derive_parameters(nh, avg, acfg);
    } catch (const ParameterError& e) {
      stages.push_back({{"stage", "parameters"}, {"attempt", attempt}, {"error", e.what()}});
      if (!acfg.target_k || *acfg.target_k <= 1) break;
      k_override = (*acfg.target_k + 1) / 2;
      continue;
    } catch (const InputError& e) {
      stages.push_back({{"stage", "parameters"}, {"attempt", attempt}, {"error", e.what()}});
      break;
    }
    stages.push_back({{"stage", "parameters"}, {"attempt", attempt}, {"k", par.k}, {"b", par.b}, {"q", par.q}});

    BuilderState st;
    st.U = VertexSet::all(nh);
    st.D = VertexSet(nh);
    st.b = par.b;
    st.q = par.q;
    const auto theta = static_cast<std::int64_t>(
        std::ceil((1 - 2 * cfg.eps) * static_cast<double>(par.b) * static_cast<double>(delta)));
    bool aborted = false;

    for (std::int64_t i = 0; i < par.q; ++i) {
      if (static_cast<std::int64_t>(st.U.size()) < par.b) {
        stages.push_back({{"stage", "abort"}, {"attempt", attempt}, {"reason", "reservoir exhausted"}, {"index", i}});
        aborted = true;
        break;
      }
      const GrowthResult grown = grow_branch_set(h, st.U, par.b, theta);
      if (!grown.ok) {
        stages.push_back({{"stage", "abort"},
                          {"attempt", attempt},
                          {"reason", "growth failure"},
                          {"index", i},
                          {"neighborhood", grown.neighborhood},
                          {"theta", theta}});
        aborted = true;
        break;
      }
      st.B.push_back(grown.set);
      st.U.erase_all(grown.set.members());
      const int moves = repair_dump(h, st, cfg.eps);
      const std::int64_t cap = carve_cap(cfg.eps, nh, static_cast<std::int64_t>(st.D.size()), total_size(st.B));
      SearchBudget carve_budget = budget;
      carve_budget.seed = rng();
      const VertexSet carved = carve_nonexpanding(h, st.U, cfg.eps, cap, carve_budget);
      st.D.insert_all(carved.members());
      st.U.erase_all(carved.members());
      st.bad = compute_bad(h, st, cfg.eps, delta);
      check_state_invariants(h, st, cfg.eps, delta);
      stages.push_back({{"stage", "branch_set"},
                        {"attempt", attempt},
                        {"index", i},
                        {"size", grown.set.size()},
                        {"neighborhood", grown.neighborhood},
                        {"repairs", moves},
                        {"carved", carved.size()},
                        {"D", st.D.size()},
                        {"U", st.U.size()},
                        {"bad", st.bad.size()}});
      if (observer) observer("branch_set", h, st);
    }

    st.bad = compute_bad(h, st, cfg.eps, delta);
    if (!st.B.empty() && 10 * static_cast<std::int64_t>(st.bad.size()) >= 9 * par.q) {
      stages.push_back({{"stage", "abort"}, {"attempt", attempt}, {"reason", "too many bad sets"}, {"bad", st.bad.size()}});
      aborted = true;
    }

    if (cfg.extra_set && !st.B.empty()) {
      std::vector<VertexSet> targets;
      for (std::size_t i = 0, next_bad = 0; i < st.B.size(); ++i) {
        if (next_bad < st.bad.size() && st.bad[next_bad] == i) {
          ++next_bad;
          continue;
        }
        VertexSet reach = set_intersection(neighborhood(h, st.B[i]), st.U);
        if (!reach.empty()) targets.push_back(std::move(reach));
      }
      if (!targets.empty()) {
        try {
          const VertexSet hub = hitting_connector(h, st.U, targets, acfg, rng);
          const GrowthResult extra = extend_branch_set(h, st.U, hub, par.b, 0);
          st.B.push_back(extra.set);
          st.U.erase_all(extra.set.members());
          stages.push_back({{"stage", "extra_set"}, {"attempt", attempt}, {"size", extra.set.size()},
                            {"targets", targets.size()}});
        } catch (const HittingFailure& e) {
          stages.push_back({{"stage", "extra_set"}, {"attempt", attempt}, {"error", e.what()}});
        }
      }
      st.bad = compute_bad(h, st, cfg.eps, delta);
      if (observer) observer("extra_set", h, st);
    }

    const std::size_t max_len = max_path_length(cfg.eps1, static_cast<double>(nh), t, cfg.log_base);
    // Later rounds start from the enlarged sets, so a set is no longer
    // limited to one path per boundary vertex.
    std::size_t previous_unconnected = std::numeric_limits<std::size_t>::max();
    for (int round = 0; round < kConnectRounds; ++round) {
      const ConnectionPlan plan = connect_pairs(h, st.B, st.U, max_len);
      if (!plan_is_consistent(h, st.B, st.U, plan, max_len))
        throw InvariantViolation("connection plan failed its consistency check");
      for (const Connection& c : plan.pairs) {
        const auto interior = c.path.interior();
        st.B[std::min(c.i, c.j)].insert_all(interior);
        st.U.erase_all(interior);
      }
      stages.push_back({{"stage", "connect"},
                        {"attempt", attempt},
                        {"round", round},
                        {"max_len", max_len},
                        {"paths", plan.pairs.size()},
                        {"adjacent", plan.adjacent.size()},
                        {"unconnected", plan.unconnected.size()}});
      if (plan.unconnected.empty() || plan.pairs.empty() || plan.unconnected.size() >= previous_unconnected) break;
      previous_unconnected = plan.unconnected.size();
    }
    st.bad = compute_bad(h, st, cfg.eps, delta);
    if (observer) observer("connect", h, st);

    const auto family = select_clique_family(h, st.B);
    const std::vector<VertexSet> chosen = extend_with_singletons(h, st.B, family);
    stages.push_back({{"stage", "select"}, {"attempt", attempt}, {"k", family.size()},
                      {"singletons", chosen.size() - family.size()}});
    if (chosen.size() > best.size()) {
      best.clear();
      for (const VertexSet& set : chosen) {
        std::vector<Vertex> ids;
        for (Vertex v : set) ids.push_back(to_host[v]);
        std::sort(ids.begin(), ids.end());
        best.push_back(std::move(ids));
      }
    }

    const auto reached = static_cast<std::int64_t>(chosen.size());
    if (!aborted || reached >= par.k) break;
    const std::int64_t next = (par.k + 1) / 2;
    if (next == par.k || next + 1 <= static_cast<std::int64_t>(best.size())) break;
    k_override = next;
  }

  if (best.empty()) best.push_back({nh > 0 ? to_host[0] : 0});

  MinorCertificate cert;
  cert.k = static_cast<std::int64_t>(best.size());
  cert.branch_sets = std::move(best);
  cert.provenance = {{"method", "build_minor"}, {"config", to_json(cfg)}, {"seed", cfg.seed}, {"t", t},
                     {"stages", stages}};
  const CertReport report = verify_certificate(g, cert);
  if (!report.valid) throw InvariantViolation("builder produced an invalid certificate: " + to_json(report).dump());
  return cert;
}

}  // namespace minorforge

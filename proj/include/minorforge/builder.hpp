#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "minorforge/certify.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/expansion.hpp"
#include "minorforge/graph.hpp"

namespace minorforge {

struct BuilderConfig {
  double eps = 0.3;
  double eps1 = 0.1;
  /// Expansion threshold of the extracted expander; unset means b/2 for the
  /// branch-set size b derived from G itself.
  std::optional<double> t;
  int polylog_exp = 10;
  std::optional<std::int64_t> target_k;
  std::uint64_t seed = 0;
  int max_retries = 6;
  double log_base = 2.0;
  /// Exponent of log n in the hitting connector's sample size.
  int hitting_log_exp = 1;
  /// Build the extra set adjacent to every good branch set.
  bool extra_set = true;
  SearchBudget budget{.exact_n = 16,
                      .exact_n_robust = 10,
                      .seed = 0,
                      .all_roots_limit = 128,
                      .ball_roots = 32,
                      .local_search_seeds = 8,
                      .power_iterations = 60,
                      .max_iterations = 0};

  /// Throws ParameterError unless 0 < eps < 1, eps1 > 0, t > 0 (when set),
  /// polylog_exp >= 1, target_k >= 1 (when set), max_retries >= 0, log_base > 1.
  void validate() const;
};

nlohmann::json to_json(const BuilderConfig& cfg);
/// Missing keys keep their defaults; unknown keys raise InputError.
BuilderConfig builder_config_from_json(const nlohmann::json& doc);

struct Parameters {
  std::int64_t k = 0;
  std::int64_t b = 0;
  std::int64_t q = 0;
};

/// k = target_k or max(3, floor(sqrt(n d) / log^c n)), b = max(1, floor(eps^2 n / (k log^c n))), q = k.
/// n < 2 or d < 1 raise InputError; b * q > n raises ParameterError.
Parameters derive_parameters(std::int64_t n, std::int64_t d, const BuilderConfig& cfg);

struct GrowthResult {
  VertexSet set;
  /// |N(set)| in the whole graph.
  std::int64_t neighborhood = 0;
  /// |set| reached b and neighborhood >= theta.
  bool ok = false;
};

/// Grows a connected set of b vertices inside U: starts at the vertex with the
/// most neighbors in U, then repeatedly adds the frontier vertex maximizing
/// |N(B + v) ∩ U| (smallest id on ties). |U| < b raises InputError.
GrowthResult grow_branch_set(const Graph& g, const VertexSet& u, std::int64_t b, std::int64_t theta);

/// Same greedy rule, continuing from a non-empty connected start set.
GrowthResult extend_branch_set(const Graph& g, const VertexSet& u, const VertexSet& start, std::int64_t b,
                               std::int64_t theta);

/// Greedy union of sets W inside U with 10 |N(W) ∩ (U - W)| < eps |W|, each
/// removed from U before the next search, keeping the union within cap.
VertexSet carve_nonexpanding(const Graph& g, const VertexSet& u, double eps, std::int64_t cap,
                             const SearchBudget& budget);

/// A target unreachable from the sample inside U.
class HittingFailure : public ConnectivityError {
public:
  HittingFailure(const std::string& what, std::size_t target)
      : ConnectivityError(what, 0), target_(target) {}
  std::size_t target() const noexcept { return target_; }

private:
  std::size_t target_;
};

/// Connected B' ⊆ U meeting every target: samples min(|U|, ceil(sqrt(n d) log^x n))
/// points of U, joins each target to its closest sample point by a shortest
/// path inside U, then links the pieces by shortest paths inside U.
VertexSet hitting_connector(const Graph& g, const VertexSet& u, std::span<const VertexSet> targets,
                            const BuilderConfig& cfg, std::mt19937_64& rng);

/// Indices of a pairwise-adjacent sub-family: sets ordered by the number of
/// other sets they touch (descending, then index), each kept when adjacent
/// to all kept so far.
std::vector<std::size_t> select_clique_family(const Graph& g, std::span<const VertexSet> sets);

/// Bookkeeping of the construction, over the ids of the extracted expander.
struct BuilderState {
  std::vector<VertexSet> B;
  VertexSet D;
  VertexSet U;
  std::vector<std::size_t> bad;
  std::int64_t b = 0;
  std::int64_t q = 0;
};

nlohmann::json to_json(const BuilderState& s);

/// Indices i with 10 |N(B_i) ∩ U| < eps b d.
std::vector<std::size_t> compute_bad(const Graph& h, const BuilderState& s, double eps, std::int64_t d);

/// Partition of V(H), connectivity of each B_i, 10 |N(D) ∩ U| < eps |D|,
/// eps |D| <= 2 |B| and the stored bad set. Throws InvariantViolation with a
/// state dump on the first failure.
void check_state_invariants(const Graph& h, const BuilderState& s, double eps, std::int64_t d);

/// Called at every pipeline checkpoint with the stage name, the expander the
/// state refers to and the state itself.
using BuildObserver = std::function<void(std::string_view stage, const Graph& h, const BuilderState& s)>;

/// Extracts an expander H, grows branch sets over a shrinking reservoir with
/// a dump set, joins pairs by short disjoint paths, and returns the largest
/// pairwise-adjacent family found over all attempts, verified against G. A
/// leftover vertex adjacent to every chosen set joins as a singleton.
/// G must be connected with n >= 3 (InputError otherwise).
MinorCertificate build_minor(const Graph& g, const BuilderConfig& cfg, const BuildObserver& observer = {});

/// Voronoi partition around k seeded random centers followed by the same
/// family selection. Requires 1 <= k <= n.
MinorCertificate baseline_random_contraction(const Graph& g, std::int64_t k, std::uint64_t seed);

}  // namespace minorforge

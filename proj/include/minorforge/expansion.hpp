#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/rational.hpp"

namespace minorforge {

/// Parameters of the sublinear expansion rate rho(x).
struct RhoParams {
  double eps1 = 0.1;
  double t = 4.0;
  double log_base = 2.0;

  /// Throws InputError unless eps1 > 0, t > 0 and log_base > 1.
  void validate() const;
};

/// rho(x) = 0 for x < t/5, else eps1 / log_b(15x/t)^2.
double rho(double x, const RhoParams& p);

enum class Exactness { exact, heuristic };
std::string_view to_string(Exactness e);

/// Outcome of an expansion check. A failed verdict always carries a witness
/// that violates the property when re-checked from scratch; `exact` means
/// every set in the quantifier range was examined.
struct Verdict {
  bool passed = true;
  std::optional<VertexSet> witness;
  /// Edge set F removed by the adversary (robust expansion only).
  std::optional<std::vector<Edge>> witness_edges;
  Exactness exactness = Exactness::exact;
  std::uint64_t checked_subsets = 0;
};

/// Controls the exhaustive/heuristic split and the falsifier's search effort.
///
/// Graphs with at most `exact_n` vertices (`exact_n_robust` for the robust
/// check) are decided by enumerating every subset. Larger graphs go to the
/// falsifier, which scores every prefix of a family of vertex orderings:
/// BFS orders from each root (all vertices when n <= all_roots_limit,
/// otherwise `ball_roots` sampled ones), greedy local-search growth from
/// `local_search_seeds` random starts, and sweep orders of an approximate
/// second eigenvector after `power_iterations` power steps.
struct SearchBudget {
  Vertex exact_n = 16;
  Vertex exact_n_robust = 10;
  std::uint64_t seed = 0;
  Vertex all_roots_limit = 512;
  int ball_roots = 128;
  int local_search_seeds = 32;
  int power_iterations = 100;
  /// Refinement rounds in extract_expander; 0 selects 10 * log2(n).
  int max_iterations = 0;
};

/// Largest n accepted for subset enumeration.
inline constexpr Vertex kMaxEnumerationOrder = 22;

/// Every non-empty U with |U| <= floor(n/2) has |N(U)| >= eps|U|.
Verdict check_vertex_expansion(const Graph& g, double eps, const SearchBudget& budget = {});

/// Every non-empty X with |X| <= alpha*n/t has |N(X)| >= t|X|.
Verdict check_t_alpha_expanding(const Graph& g, double t, double alpha, const SearchBudget& budget = {});

/// Every non-empty U with |U| <= eps*n has average degree d(G[U]) <= eps*delta(G).
Verdict check_locally_sparse(const Graph& g, double eps, const SearchBudget& budget = {});

/// Every X with t/2 <= |X| <= n/2 keeps |N_{G-F}(X)| >= rho(|X|)|X| against
/// every edge set F with e(F) <= d(G) rho(|X|)|X|. For a fixed X the
/// adversary's best F deletes all edges to the external neighbors with the
/// fewest edges into X first, so only X is searched.
Verdict check_robust_expander(const Graph& g, const RhoParams& p, const SearchBudget& budget = {});

/// min |N(U)|/|U| over non-empty U with |U| <= floor(n/2), by enumeration.
/// Requires 2 <= n <= 20; larger graphs raise CapabilityError.
Rational vertex_expansion_constant(const Graph& g);

/// Searches for non-empty W with |W| <= max_size and divisor*|N(W)| < eps*|W|.
/// Used for carving non-expanding pieces out of a reservoir.
std::optional<VertexSet> find_nonexpanding_set(const Graph& g, double eps, std::int64_t divisor, std::size_t max_size,
                                               const SearchBudget& budget);

}  // namespace minorforge

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "minorforge/graph.hpp"

namespace minorforge {

/// Claimed K_k minor: k disjoint connected branch sets, pairwise joined by an
/// edge of the graph they refer to.
struct MinorCertificate {
  std::int64_t k = 0;
  std::vector<std::vector<Vertex>> branch_sets;
  /// Configuration, seed and stage log of the run that produced it.
  nlohmann::json provenance = nlohmann::json::object();
};

enum class ViolationKind { disjointness, connectivity, adjacency };
std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Branch-set indices, followed by the vertex involved for disjointness.
  std::vector<std::int64_t> detail;
};

struct CertReport {
  bool valid = false;
  std::int64_t k = 0;
  std::vector<Violation> violations;
};

/// Checks disjointness, connectivity of each branch set and an edge between
/// every pair, reading nothing but the graph and the sets. Ids outside the
/// graph, or k disagreeing with the number of sets, raise InputError.
CertReport verify_certificate(const Graph& g, const MinorCertificate& cert);

/// Exact Hadwiger number by branch and bound over partitions of subsets of V.
/// n <= 10; larger graphs raise CapabilityError.
int hadwiger_brute(const Graph& g);

/// Clique-minor bound formulas with every hidden constant set to 1.
struct BoundsReport {
  double average_degree_minor = 0;  // sqrt(n t log t) / sqrt(log n)
  double clique_minor_t_alpha = 0;  // alpha^2 * the above
  double clique_minor_expanding = 0;  // sqrt(n d) / log^10 n
  bool average_degree_minor_vacuous = false;
  bool clique_minor_t_alpha_vacuous = false;
  bool clique_minor_expanding_vacuous = false;
  double log_base = 2.0;
};

/// Requires n > 1, d > 0, t > 0, alpha >= 0. A value below 3 is flagged vacuous.
BoundsReport theoretical_bounds(double n, double d, double t, double alpha, double log_base = 2.0);
nlohmann::json to_json(const BoundsReport& r);

/// Certificate file: {"k": int, "branch_sets": [[int, ...], ...], "graph_hash": hex}.
nlohmann::json certificate_to_json(const MinorCertificate& cert, const Graph& g);
/// Rejects malformed documents and hash mismatches with InputError.
MinorCertificate certificate_from_json(const nlohmann::json& doc, const Graph& g);

nlohmann::json to_json(const CertReport& r);

}  // namespace minorforge

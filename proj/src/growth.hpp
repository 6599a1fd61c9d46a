#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "minorforge/expansion.hpp"
#include "minorforge/graph.hpp"

namespace minorforge::detail {

/// Incremental statistics of a vertex set S grown one vertex at a time.
class GrowthTracker {
public:
  explicit GrowthTracker(const Graph& g);

  void reset();
  void add(Vertex v);

  std::size_t size() const noexcept { return members_.size(); }
  std::span<const Vertex> members() const noexcept { return members_; }
  bool in_set(Vertex v) const { return in_[v] != 0; }
  std::int32_t edges_into(Vertex v) const { return into_[v]; }

  /// |N(S)|
  std::int64_t boundary() const noexcept { return boundary_; }
  /// e(G[S])
  std::int64_t internal_edges() const noexcept { return internal_; }

  /// |N(S)| left after deleting at most `edge_budget` edges chosen to
  /// disconnect as many external neighbors as possible (cheapest first).
  std::int64_t survivors_after_cut(double edge_budget) const;

private:
  const Graph* g_;
  std::vector<std::uint8_t> in_;
  std::vector<std::int32_t> into_;
  std::vector<std::int64_t> hist_;  // hist_[c]: external neighbors with c edges into S
  std::vector<Vertex> members_;
  std::vector<Vertex> touched_;
  std::int64_t boundary_ = 0;
  std::int64_t internal_ = 0;
};

enum class GrowthObjective { min_boundary, max_density };

using OrderVisitor = std::function<void(std::span<const Vertex>)>;

/// Feeds candidate growth orders (each truncated to max_size) to `visit`.
void for_each_candidate_order(const Graph& g, const SearchBudget& budget, std::size_t max_size,
                              GrowthObjective objective, const OrderVisitor& visit);

/// Order produced by greedy growth from `seed` (exposed for tests).
std::vector<Vertex> greedy_growth_order(const Graph& g, Vertex seed, std::size_t max_size, GrowthObjective objective);

/// Vertices sorted by an approximate second eigenvector of the lazy
/// normalized adjacency operator.
std::vector<Vertex> spectral_order(const Graph& g, int iterations, std::uint64_t seed);

/// Bitmask tables for subset enumeration over graphs with n <= kMaxEnumerationOrder.
struct MaskGraph {
  explicit MaskGraph(const Graph& g);

  int n;
  std::vector<std::uint32_t> adj;
};

VertexSet mask_to_set(std::uint32_t mask, Vertex n);

}  // namespace minorforge::detail

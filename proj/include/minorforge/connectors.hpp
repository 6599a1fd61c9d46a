#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  std::span<const Vertex> interior() const {
    if (vertices.size() < 2) return {};
    return {vertices.data() + 1, vertices.size() - 2};
  }
};

/// Shortest path from X1 to X2 in G - forbidden. Among shortest paths the
/// lexicographically smallest vertex sequence is returned. A common vertex
/// gives a single-vertex path. Raises ConnectivityError (carrying the number
/// of vertices reachable from X1) when no path exists.
Path shortest_path_between_sets(const Graph& g, const VertexSet& x1, const VertexSet& x2,
                                const VertexSet& forbidden);

struct Connection {
  std::size_t i = 0;
  std::size_t j = 0;
  Path path;  // starts in set i, ends in set j
};

struct ConnectionPlan {
  std::vector<Connection> pairs;
  /// Union of all path interiors.
  VertexSet used;
  /// Pairs (i < j) already joined by an edge before planning.
  std::vector<std::pair<std::size_t, std::size_t>> adjacent;
  /// Pairs (i < j) for which no path within the length cap was found.
  std::vector<std::pair<std::size_t, std::size_t>> unconnected;
};

/// Joins every non-adjacent pair of the (disjoint) branch sets by a path of
/// at most max_len edges whose interior runs through reservoir minus the
/// interiors already used. Pairs are served closest first, with distances
/// recomputed lazily as the reservoir is consumed.
ConnectionPlan connect_pairs(const Graph& g, std::span<const VertexSet> branch_sets, const VertexSet& reservoir,
                             std::size_t max_len);

/// Independent re-check of the plan invariants: interiors pairwise disjoint,
/// inside the reservoir and outside every branch set; paths are genuine, end
/// in the right sets and respect max_len.
bool plan_is_consistent(const Graph& g, std::span<const VertexSet> branch_sets, const VertexSet& reservoir,
                        const ConnectionPlan& plan, std::size_t max_len);

}  // namespace minorforge

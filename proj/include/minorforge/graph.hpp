#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "minorforge/rational.hpp"

namespace minorforge {

using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph in compressed adjacency form. Neighbor lists are
/// sorted ascending; the graph never changes after construction.
class Graph {
public:
  Graph() = default;

  /// Builds a graph on vertices [0, n). Rejects self-loops, repeated edges
  /// (in either orientation) and ids outside the range with an InputError.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::int64_t edge_count() const noexcept { return static_cast<std::int64_t>(targets_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Subset of the vertices of a host graph with `universe` vertices.
/// Membership is O(1); iteration visits members in ascending order.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(Vertex universe);
  /// Throws InputError on ids outside [0, universe) or duplicates.
  VertexSet(Vertex universe, std::span<const Vertex> members);
  VertexSet(Vertex universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

  static VertexSet all(Vertex universe);

  Vertex universe() const noexcept { return static_cast<Vertex>(mask_.size()); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const { return v >= 0 && v < universe() && mask_[v] != 0; }

  std::span<const Vertex> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// No-op when already present / absent.
  void insert(Vertex v);
  void erase(Vertex v);
  void insert_all(std::span<const Vertex> vs);
  void erase_all(std::span<const Vertex> vs);

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.mask_.size() == b.mask_.size() && a.members_ == b.members_;
  }

private:
  void check_id(Vertex v) const;

  std::vector<std::uint8_t> mask_;
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

/// A graph together with the host ids of its vertices: vertex i of `graph`
/// is `original_ids[i]` in the graph it was cut from.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original_ids;

  VertexSet to_host(const VertexSet& local, Vertex host_universe) const;
};

/// External neighborhood: vertices outside `s` adjacent to some vertex of `s`.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// |N(s) ∩ within|, without materializing N(s).
std::size_t neighborhood_size_within(const Graph& g, const VertexSet& s, const VertexSet& within);

/// 2m/n. Throws InputError on the empty graph.
Rational average_degree(const Graph& g);
std::int32_t min_degree(const Graph& g);
std::int32_t max_degree(const Graph& g);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
Subgraph delete_vertices(const Graph& g, const VertexSet& s);
/// Removes the listed edges; edges absent from `g` are ignored.
Graph delete_edges(const Graph& g, std::span<const Edge> edges);

/// Contracts each part to a single vertex. New vertex i < parts.size() stands
/// for parts[i]; the remaining new vertices are the uncovered original
/// vertices in ascending order. Parts must be non-empty, pairwise disjoint and
/// connected in `g`.
Graph contract_partition(const Graph& g, std::span<const VertexSet> parts);

/// Whether g[s] is connected. The empty set counts as disconnected.
bool is_connected_subset(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

/// Connected components, each in ascending id order, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Number of edges of g with both ends in s.
std::int64_t internal_edge_count(const Graph& g, const VertexSet& s);

}  // namespace minorforge

#include "minorforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "minorforge/errors.hpp"

namespace minorforge {

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void require_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) throw InputError("vertex sets over different host graphs");
}

void require_host(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw InputError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                     std::to_string(g.vertex_count()));
}

}  // namespace

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<std::int64_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("edge " + edge_text(e) + " has an endpoint outside [0, " + std::to_string(n) + ")");
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(static_cast<std::size_t>(g.offsets_[n]));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + g.offsets_[v];
    auto last = g.targets_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last)
      throw InputError("duplicate edge " + edge_text({std::min(v, *dup), std::max(v, *dup)}));
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

VertexSet::VertexSet(Vertex universe) {
  if (universe < 0) throw InputError("negative universe");
  mask_.assign(static_cast<std::size_t>(universe), 0);
}

VertexSet::VertexSet(Vertex universe, std::span<const Vertex> members) : VertexSet(universe) {
  members_.reserve(members.size());
  for (Vertex v : members) {
    check_id(v);
    if (mask_[v]) throw InputError("duplicate vertex " + std::to_string(v) + " in vertex set");
    mask_[v] = 1;
    members_.push_back(v);
  }
  std::sort(members_.begin(), members_.end());
}

VertexSet VertexSet::all(Vertex universe) {
  VertexSet s(universe);
  std::fill(s.mask_.begin(), s.mask_.end(), 1);
  s.members_.resize(static_cast<std::size_t>(universe));
  std::iota(s.members_.begin(), s.members_.end(), 0);
  return s;
}

void VertexSet::check_id(Vertex v) const {
  if (v < 0 || v >= universe())
    throw InputError("vertex id " + std::to_string(v) + " outside [0, " + std::to_string(universe()) + ")");
}

void VertexSet::insert(Vertex v) {
  check_id(v);
  if (mask_[v]) return;
  mask_[v] = 1;
  members_.insert(std::lower_bound(members_.begin(), members_.end(), v), v);
}

void VertexSet::erase(Vertex v) {
  check_id(v);
  if (!mask_[v]) return;
  mask_[v] = 0;
  members_.erase(std::lower_bound(members_.begin(), members_.end(), v));
}

void VertexSet::insert_all(std::span<const Vertex> vs) {
  bool added = false;
  for (Vertex v : vs) {
    check_id(v);
    if (!mask_[v]) {
      mask_[v] = 1;
      members_.push_back(v);
      added = true;
    }
  }
  if (added) std::sort(members_.begin(), members_.end());
}

void VertexSet::erase_all(std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    check_id(v);
    mask_[v] = 0;
  }
  std::erase_if(members_, [&](Vertex v) { return mask_[v] == 0; });
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  require_same_universe(a, b);
  VertexSet out = a;
  out.insert_all(b.members());
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  require_same_universe(a, b);
  VertexSet out(a.universe());
  std::vector<Vertex> kept;
  for (Vertex v : a)
    if (!b.contains(v)) kept.push_back(v);
  out.insert_all(kept);
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  require_same_universe(a, b);
  VertexSet out(a.universe());
  std::vector<Vertex> kept;
  for (Vertex v : a)
    if (b.contains(v)) kept.push_back(v);
  out.insert_all(kept);
  return out;
}

VertexSet Subgraph::to_host(const VertexSet& local, Vertex host_universe) const {
  std::vector<Vertex> ids;
  ids.reserve(local.size());
  for (Vertex v : local) ids.push_back(original_ids.at(static_cast<std::size_t>(v)));
  return VertexSet(host_universe, ids);
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  VertexSet out(g.vertex_count());
  std::vector<Vertex> found;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (!s.contains(w) && !seen[w]) {
        seen[w] = 1;
        found.push_back(w);
      }
  out.insert_all(found);
  return out;
}

std::size_t neighborhood_size_within(const Graph& g, const VertexSet& s, const VertexSet& within) {
  require_host(g, s);
  require_host(g, within);
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::size_t count = 0;
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (!s.contains(w) && within.contains(w) && !seen[w]) {
        seen[w] = 1;
        ++count;
      }
  return count;
}

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("average degree of the empty graph");
  return Rational(2 * g.edge_count(), g.vertex_count());
}

std::int32_t min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("minimum degree of the empty graph");
  std::int32_t best = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::int32_t max_degree(const Graph& g) {
  std::int32_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  Subgraph out;
  out.original_ids.assign(s.begin(), s.end());
  for (std::size_t i = 0; i < out.original_ids.size(); ++i) local[out.original_ids[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (u < w && local[w] >= 0) edges.push_back({local[u], local[w]});
  out.graph = Graph::from_edges(static_cast<Vertex>(s.size()), edges);
  return out;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  VertexSet keep(g.vertex_count());
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!s.contains(v)) kept.push_back(v);
  keep.insert_all(kept);
  return induced_subgraph(g, keep);
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop;
  drop.reserve(removed.size());
  for (Edge e : removed) drop.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  return Graph::from_edges(g.vertex_count(), kept);
}

Graph contract_partition(const Graph& g, std::span<const VertexSet> parts) {
  const Vertex n = g.vertex_count();
  std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const VertexSet& part = parts[i];
    require_host(g, part);
    if (part.empty()) throw InputError("part " + std::to_string(i) + " is empty");
    for (Vertex v : part) {
      if (image[v] >= 0)
        throw InputError("part " + std::to_string(i) + " overlaps part " + std::to_string(image[v]) + " at vertex " +
                         std::to_string(v));
      image[v] = static_cast<Vertex>(i);
    }
    if (!is_connected_subset(g, part)) throw InputError("part " + std::to_string(i) + " is not connected");
  }
  Vertex next = static_cast<Vertex>(parts.size());
  for (Vertex v = 0; v < n; ++v)
    if (image[v] < 0) image[v] = next++;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = image[e.u];
    const Vertex b = image[e.v];
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(next, edges);
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  if (s.empty()) return false;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{*s.begin()};
  seen[*s.begin()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (s.contains(w) && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == s.size();
}

bool is_connected(const Graph& g) { return is_connected_subset(g, VertexSet::all(g.vertex_count())); }

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::int64_t internal_edge_count(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  std::int64_t twice = 0;
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (s.contains(w)) ++twice;
  return twice / 2;
}

}  // namespace minorforge

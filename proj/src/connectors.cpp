#include "minorforge/connectors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <tuple>

#include "minorforge/errors.hpp"

namespace minorforge {

namespace {

constexpr std::int32_t kUnreached = -1;

void require_host(const Graph& g, const VertexSet& s, const char* name) {
  if (s.universe() != g.vertex_count())
    throw InputError(std::string(name) + " is not a vertex set of this graph");
}

// Multi-source BFS distances from `sources` through vertices accepted by `allowed`.
template <class Allowed>
std::vector<std::int32_t> bfs_distances(const Graph& g, std::span<const Vertex> sources, Allowed&& allowed) {
  std::vector<std::int32_t> dist(static_cast<std::size_t>(g.vertex_count()), kUnreached);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u))
      if (dist[w] == kUnreached && allowed(w)) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<Vertex> allowed_members(const VertexSet& s, const VertexSet& forbidden) {
  std::vector<Vertex> out;
  for (Vertex v : s)
    if (!forbidden.contains(v)) out.push_back(v);
  return out;
}

}  // namespace

Path shortest_path_between_sets(const Graph& g, const VertexSet& x1, const VertexSet& x2,
                                const VertexSet& forbidden) {
  require_host(g, x1, "X1");
  require_host(g, x2, "X2");
  require_host(g, forbidden, "forbidden set");
  if (x1.empty() || x2.empty()) throw InputError("shortest path: endpoint sets must be non-empty");

  const std::vector<Vertex> sources = allowed_members(x1, forbidden);
  const std::vector<Vertex> targets = allowed_members(x2, forbidden);
  for (Vertex v : sources)
    if (x2.contains(v) && !forbidden.contains(v)) return Path{{v}};

  auto allowed = [&](Vertex v) { return !forbidden.contains(v); };
  const auto to_target = bfs_distances(g, targets, allowed);

  Vertex start = -1;
  for (Vertex v : sources)
    if (to_target[v] != kUnreached && (start < 0 || to_target[v] < to_target[start])) start = v;
  if (start < 0) {
    const auto from_source = bfs_distances(g, sources, allowed);
    std::size_t reachable = 0;
    for (std::int32_t d : from_source)
      if (d != kUnreached) ++reachable;
    throw ConnectivityError("no path between the vertex sets (" + std::to_string(reachable) +
                                " vertices reachable from X1)",
                            reachable);
  }

  Path path{{start}};
  Vertex u = start;
  while (to_target[u] > 0) {
    for (Vertex w : g.neighbors(u))
      if (to_target[w] == to_target[u] - 1) {
        u = w;
        break;
      }
    path.vertices.push_back(u);
  }
  return path;
}

ConnectionPlan connect_pairs(const Graph& g, std::span<const VertexSet> branch_sets, const VertexSet& reservoir,
                             std::size_t max_len) {
  require_host(g, reservoir, "reservoir");
  const Vertex n = g.vertex_count();
  const std::size_t q = branch_sets.size();
  std::vector<std::int32_t> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < q; ++i) {
    require_host(g, branch_sets[i], "branch set");
    for (Vertex v : branch_sets[i]) {
      if (owner[v] >= 0)
        throw InputError("branch sets " + std::to_string(owner[v]) + " and " + std::to_string(i) + " overlap");
      owner[v] = static_cast<std::int32_t>(i);
    }
  }

  ConnectionPlan plan;
  plan.used = VertexSet(n);

  std::vector<std::uint8_t> adjacent(q * q, 0);
  for (const Edge& e : g.edges()) {
    const auto a = owner[e.u];
    const auto b = owner[e.v];
    if (a >= 0 && b >= 0 && a != b) {
      adjacent[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)] = 1;
      adjacent[static_cast<std::size_t>(b) * q + static_cast<std::size_t>(a)] = 1;
    }
  }

  // Interior vertices: in the reservoir, outside every branch set, not yet used.
  std::vector<std::uint8_t> free(static_cast<std::size_t>(n), 0);
  for (Vertex v : reservoir)
    if (owner[v] < 0) free[v] = 1;

  auto find_path = [&](std::size_t i, std::size_t j) -> std::optional<Path> {
    VertexSet forbidden(n);
    std::vector<Vertex> blocked;
    for (Vertex v = 0; v < n; ++v)
      if (!free[v] && owner[v] != static_cast<std::int32_t>(i) && owner[v] != static_cast<std::int32_t>(j))
        blocked.push_back(v);
    forbidden.insert_all(blocked);
    try {
      return shortest_path_between_sets(g, branch_sets[i], branch_sets[j], forbidden);
    } catch (const ConnectivityError&) {
      return std::nullopt;
    }
  };

  using Entry = std::tuple<std::size_t, std::size_t, std::size_t>;  // (distance, i, j)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pending;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) {
      if (adjacent[i * q + j]) {
        plan.adjacent.push_back({i, j});
        continue;
      }
      const auto path = find_path(i, j);
      if (!path || path->length() > max_len) {
        plan.unconnected.push_back({i, j});
        continue;
      }
      pending.push({path->length(), i, j});
    }

  while (!pending.empty()) {
    const auto [distance, i, j] = pending.top();
    pending.pop();
    const auto path = find_path(i, j);
    if (!path || path->length() > max_len) {
      plan.unconnected.push_back({i, j});
      continue;
    }
    if (path->length() > distance && !pending.empty() && path->length() > std::get<0>(pending.top())) {
      pending.push({path->length(), i, j});
      continue;
    }
    for (Vertex v : path->interior()) free[v] = 0;
    plan.used.insert_all(path->interior());
    plan.pairs.push_back({i, j, *path});
  }
  std::sort(plan.unconnected.begin(), plan.unconnected.end());
  return plan;
}

bool plan_is_consistent(const Graph& g, std::span<const VertexSet> branch_sets, const VertexSet& reservoir,
                        const ConnectionPlan& plan, std::size_t max_len) {
  VertexSet seen(g.vertex_count());
  for (const Connection& c : plan.pairs) {
    if (c.i >= branch_sets.size() || c.j >= branch_sets.size() || c.i == c.j) return false;
    const auto& vs = c.path.vertices;
    if (vs.size() < 2 || c.path.length() > max_len) return false;
    if (!branch_sets[c.i].contains(vs.front()) || !branch_sets[c.j].contains(vs.back())) return false;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k)
      if (!g.has_edge(vs[k], vs[k + 1])) return false;
    for (Vertex v : c.path.interior()) {
      if (!reservoir.contains(v) || seen.contains(v)) return false;
      for (const VertexSet& b : branch_sets)
        if (b.contains(v)) return false;
      seen.insert(v);
    }
  }
  return seen == plan.used;
}

}  // namespace minorforge

#include "growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "minorforge/errors.hpp"

namespace minorforge::detail {

GrowthTracker::GrowthTracker(const Graph& g)
    : g_(&g),
      in_(static_cast<std::size_t>(g.vertex_count()), 0),
      into_(static_cast<std::size_t>(g.vertex_count()), 0),
      hist_(static_cast<std::size_t>(max_degree(g)) + 2, 0) {}

void GrowthTracker::reset() {
  for (Vertex v : touched_) {
    in_[v] = 0;
    into_[v] = 0;
  }
  std::fill(hist_.begin(), hist_.end(), 0);
  touched_.clear();
  members_.clear();
  boundary_ = 0;
  internal_ = 0;
}

void GrowthTracker::add(Vertex v) {
  if (in_[v]) return;
  if (into_[v] > 0) {
    --boundary_;
    --hist_[into_[v]];
  } else {
    touched_.push_back(v);
  }
  internal_ += into_[v];
  in_[v] = 1;
  members_.push_back(v);
  for (Vertex w : g_->neighbors(v)) {
    if (in_[w]) continue;
    if (into_[w] == 0) {
      ++boundary_;
      touched_.push_back(w);
    } else {
      --hist_[into_[w]];
    }
    ++into_[w];
    ++hist_[into_[w]];
  }
}

std::int64_t GrowthTracker::survivors_after_cut(double edge_budget) const {
  double remaining = edge_budget;
  std::int64_t killed = 0;
  for (std::size_t cost = 1; cost < hist_.size(); ++cost) {
    if (static_cast<double>(cost) > remaining) break;
    if (hist_[cost] == 0) continue;
    const auto affordable = static_cast<std::int64_t>(std::floor(remaining / static_cast<double>(cost)));
    const std::int64_t take = std::min(hist_[cost], affordable);
    killed += take;
    remaining -= static_cast<double>(take) * static_cast<double>(cost);
  }
  return boundary_ - killed;
}

namespace {

std::vector<Vertex> bfs_order(const Graph& g, Vertex root, std::size_t max_size, std::vector<std::uint8_t>& seen) {
  std::vector<Vertex> order{root};
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size() && order.size() < max_size; ++head)
    for (Vertex w : g.neighbors(order[head])) {
      if (seen[w]) continue;
      seen[w] = 1;
      order.push_back(w);
      if (order.size() == max_size) break;
    }
  for (Vertex v : order) seen[v] = 0;
  return order;
}

// Reverse of min-degree peeling: its prefixes are the peeling residues.
std::vector<Vertex> peeling_core_order(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<std::int32_t> deg(static_cast<std::size_t>(n));
  std::set<std::pair<std::int32_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<std::uint8_t> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> peeled;
  peeled.reserve(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[v] = 1;
    peeled.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

std::vector<Vertex> sampled_vertices(Vertex n, std::size_t count, std::mt19937_64& rng) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  if (count >= all.size()) return all;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

}  // namespace

std::vector<Vertex> greedy_growth_order(const Graph& g, Vertex seed, std::size_t max_size,
                                        GrowthObjective objective) {
  const Vertex n = g.vertex_count();
  // state: 0 = untouched, 1 = frontier (in N(S)), 2 = in S
  std::vector<std::uint8_t> state(static_cast<std::size_t>(n), 0);
  // min_boundary: key = neighbors still untouched; max_density: key = -(edges into S)
  std::vector<std::int32_t> key(static_cast<std::size_t>(n), 0);
  std::set<std::pair<std::int32_t, Vertex>> frontier;
  std::vector<Vertex> order;

  auto count_untouched = [&](Vertex v) {
    std::int32_t c = 0;
    for (Vertex w : g.neighbors(v))
      if (state[w] == 0) ++c;
    return c;
  };

  auto add = [&](Vertex v) {
    if (state[v] == 1) frontier.erase({key[v], v});
    state[v] = 2;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (state[w] == 2) continue;
      if (objective == GrowthObjective::max_density) {
        if (state[w] == 1) frontier.erase({key[w], w});
        state[w] = 1;
        --key[w];
        frontier.insert({key[w], w});
        continue;
      }
      if (state[w] == 1) continue;
      // w leaves the untouched pool: frontier neighbors lose one untouched neighbor.
      state[w] = 1;
      for (Vertex x : g.neighbors(w))
        if (state[x] == 1 && x != w) {
          frontier.erase({key[x], x});
          --key[x];
          frontier.insert({key[x], x});
        }
      key[w] = count_untouched(w);
      frontier.insert({key[w], w});
    }
  };

  add(seed);
  while (order.size() < max_size && !frontier.empty()) add(frontier.begin()->second);
  return order;
}

std::vector<Vertex> spectral_order(const Graph& g, int iterations, std::uint64_t seed) {
  const Vertex n = g.vertex_count();
  std::vector<double> scale(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) scale[v] = std::sqrt(static_cast<double>(std::max(g.degree(v), 1)));
  // Top eigenvector of D^-1/2 A D^-1/2 on each component is proportional to sqrt(deg).
  double top_norm = 0;
  for (double s : scale) top_norm += s * s;
  top_norm = std::sqrt(top_norm);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& xi : x) xi = normal(rng);
  std::vector<double> y(x.size());

  auto deflate_and_normalize = [&](std::vector<double>& vec) {
    double dot = 0;
    for (Vertex v = 0; v < n; ++v) dot += vec[v] * scale[v] / top_norm;
    double norm = 0;
    for (Vertex v = 0; v < n; ++v) {
      vec[v] -= dot * scale[v] / top_norm;
      norm += vec[v] * vec[v];
    }
    norm = std::sqrt(norm);
    if (norm > 0)
      for (double& xi : vec) xi /= norm;
  };

  deflate_and_normalize(x);
  for (int it = 0; it < iterations; ++it) {
    for (Vertex v = 0; v < n; ++v) {
      double acc = 0;
      for (Vertex w : g.neighbors(v)) acc += x[w] / scale[w];
      y[v] = 0.5 * x[v] + 0.5 * acc / scale[v];
    }
    std::swap(x, y);
    deflate_and_normalize(x);
  }

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return x[a] / scale[a] < x[b] / scale[b]; });
  return order;
}

void for_each_candidate_order(const Graph& g, const SearchBudget& budget, std::size_t max_size,
                              GrowthObjective objective, const OrderVisitor& visit) {
  const Vertex n = g.vertex_count();
  if (n == 0 || max_size == 0) return;
  std::mt19937_64 rng(budget.seed);

  const std::size_t root_count =
      n <= budget.all_roots_limit ? static_cast<std::size_t>(n) : static_cast<std::size_t>(budget.ball_roots);
  std::vector<Vertex> roots = sampled_vertices(n, root_count, rng);
  std::sort(roots.begin(), roots.end());
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (Vertex r : roots) visit(bfs_order(g, r, max_size, seen));

  for (Vertex s : sampled_vertices(n, static_cast<std::size_t>(std::max(budget.local_search_seeds, 0)), rng))
    visit(greedy_growth_order(g, s, max_size, objective));

  if (objective == GrowthObjective::max_density) {
    auto core = peeling_core_order(g);
    if (core.size() > max_size) core.resize(max_size);
    visit(core);
  }

  if (budget.power_iterations > 0 && g.edge_count() > 0) {
    auto order = spectral_order(g, budget.power_iterations, rng());
    std::vector<Vertex> reversed(order.rbegin(), order.rend());
    if (order.size() > max_size) order.resize(max_size);
    if (reversed.size() > max_size) reversed.resize(max_size);
    visit(order);
    visit(reversed);
  }
}

MaskGraph::MaskGraph(const Graph& g) : n(g.vertex_count()), adj(static_cast<std::size_t>(g.vertex_count()), 0) {
  if (n > kMaxEnumerationOrder)
    throw CapabilityError("subset enumeration limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
}

VertexSet mask_to_set(std::uint32_t mask, Vertex n) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1u) members.push_back(v);
  return VertexSet(n, members);
}

}  // namespace minorforge::detail

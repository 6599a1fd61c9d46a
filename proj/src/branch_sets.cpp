#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "minorforge/builder.hpp"
#include "minorforge/errors.hpp"

namespace minorforge {

namespace {

double log_in(double x, double base) { return std::log(x) / std::log(base); }

std::vector<std::uint8_t> membership(const VertexSet& s) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(s.universe()), 0);
  for (Vertex v : s) in[v] = 1;
  return in;
}

void require_host(const Graph& g, const VertexSet& s, const char* name) {
  if (s.universe() != g.vertex_count()) throw InputError(std::string(name) + " is not a vertex set of this graph");
}

// Greedy growth inside U. covered marks B ∪ N(B); gain[x] counts the
// U-neighbors of x that are still uncovered.
GrowthResult grow_from(const Graph& g, const VertexSet& u, std::span<const Vertex> start, std::int64_t b,
                       std::int64_t theta) {
  const Vertex n = g.vertex_count();
  const auto in_u = membership(u);
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> in_b(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> in_front(static_cast<std::size_t>(n), 0);
  std::vector<std::int32_t> gain(static_cast<std::size_t>(n), 0);
  for (Vertex v : u)
    for (Vertex w : g.neighbors(v))
      if (in_u[w]) ++gain[v];

  std::set<std::pair<std::int32_t, Vertex>> frontier;  // (-gain, v)
  std::vector<Vertex> members;
  std::int64_t covered_count = 0;

  auto cover = [&](Vertex w) {
    if (covered[w]) return;
    covered[w] = 1;
    ++covered_count;
    for (Vertex x : g.neighbors(w)) {
      if (!in_u[x]) continue;
      if (in_front[x]) frontier.erase({-gain[x], x});
      --gain[x];
      if (in_front[x]) frontier.insert({-gain[x], x});
    }
  };
  auto add = [&](Vertex v) {
    if (in_front[v]) {
      frontier.erase({-gain[v], v});
      in_front[v] = 0;
    }
    in_b[v] = 1;
    members.push_back(v);
    cover(v);
    for (Vertex w : g.neighbors(v)) cover(w);
    for (Vertex w : g.neighbors(v))
      if (in_u[w] && !in_b[w] && !in_front[w]) {
        in_front[w] = 1;
        frontier.insert({-gain[w], w});
      }
  };

  if (start.empty()) {
    Vertex seed = -1;
    std::int32_t best = -1;
    for (Vertex v : u) {
      std::int32_t into = 0;
      for (Vertex w : g.neighbors(v))
        if (in_u[w]) ++into;
      if (into > best) {
        best = into;
        seed = v;
      }
    }
    if (seed >= 0) add(seed);
  } else {
    for (Vertex v : start) {
      if (!in_u[v]) throw InputError("start set must lie inside U");
      if (!in_b[v]) add(v);
    }
  }
  while (static_cast<std::int64_t>(members.size()) < b && !frontier.empty()) add(frontier.begin()->second);

  GrowthResult r;
  r.neighborhood = covered_count - static_cast<std::int64_t>(members.size());
  r.ok = static_cast<std::int64_t>(members.size()) >= b && r.neighborhood >= theta;
  r.set = VertexSet(n, members);
  return r;
}

}  // namespace

void BuilderConfig::validate() const {
  if (!(eps > 0 && eps < 1)) throw ParameterError("eps must lie in (0, 1)");
  if (!(eps1 > 0)) throw ParameterError("eps1 must be positive");
  if (t && !(*t > 0)) throw ParameterError("t must be positive");
  if (polylog_exp < 1) throw ParameterError("polylog exponent must be at least 1");
  if (target_k && *target_k < 1) throw ParameterError("target k must be at least 1");
  if (max_retries < 0) throw ParameterError("max_retries must be non-negative");
  if (!(log_base > 1)) throw ParameterError("log base must exceed 1");
  if (hitting_log_exp < 0) throw ParameterError("hitting log exponent must be non-negative");
}

nlohmann::json to_json(const BuilderConfig& cfg) {
  const SearchBudget& s = cfg.budget;
  return {
      {"eps", cfg.eps},
      {"eps1", cfg.eps1},
      {"t", cfg.t ? nlohmann::json(*cfg.t) : nlohmann::json(nullptr)},
      {"polylog_exp", cfg.polylog_exp},
      {"target_k", cfg.target_k ? nlohmann::json(*cfg.target_k) : nlohmann::json(nullptr)},
      {"seed", cfg.seed},
      {"max_retries", cfg.max_retries},
      {"log_base", cfg.log_base},
      {"hitting_log_exp", cfg.hitting_log_exp},
      {"extra_set", cfg.extra_set},
      {"budget",
       {{"exact_n", s.exact_n},
        {"exact_n_robust", s.exact_n_robust},
        {"all_roots_limit", s.all_roots_limit},
        {"ball_roots", s.ball_roots},
        {"local_search_seeds", s.local_search_seeds},
        {"power_iterations", s.power_iterations},
        {"max_iterations", s.max_iterations}}},
  };
}

BuilderConfig builder_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("builder config must be a JSON object");
  BuilderConfig cfg;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "eps") cfg.eps = value.get<double>();
      else if (key == "eps1") cfg.eps1 = value.get<double>();
      else if (key == "t") cfg.t = value.is_null() ? std::nullopt : std::optional<double>(value.get<double>());
      else if (key == "polylog_exp") cfg.polylog_exp = value.get<int>();
      else if (key == "target_k")
        cfg.target_k = value.is_null() ? std::nullopt : std::optional<std::int64_t>(value.get<std::int64_t>());
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "max_retries") cfg.max_retries = value.get<int>();
      else if (key == "log_base") cfg.log_base = value.get<double>();
      else if (key == "hitting_log_exp") cfg.hitting_log_exp = value.get<int>();
      else if (key == "extra_set") cfg.extra_set = value.get<bool>();
      else if (key == "budget") {
        SearchBudget& s = cfg.budget;
        for (const auto& [bkey, bvalue] : value.items()) {
          if (bkey == "exact_n") s.exact_n = bvalue.get<Vertex>();
          else if (bkey == "exact_n_robust") s.exact_n_robust = bvalue.get<Vertex>();
          else if (bkey == "all_roots_limit") s.all_roots_limit = bvalue.get<Vertex>();
          else if (bkey == "ball_roots") s.ball_roots = bvalue.get<int>();
          else if (bkey == "local_search_seeds") s.local_search_seeds = bvalue.get<int>();
          else if (bkey == "power_iterations") s.power_iterations = bvalue.get<int>();
          else if (bkey == "max_iterations") s.max_iterations = bvalue.get<int>();
          else throw InputError("unknown budget key '" + bkey + "'");
        }
      } else {
        throw InputError("unknown builder config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed builder config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

Parameters derive_parameters(std::int64_t n, std::int64_t d, const BuilderConfig& cfg) {
  cfg.validate();
  if (n < 2 || d < 1) throw InputError("derive_parameters needs n >= 2 and d >= 1");
  const double polylog = std::pow(log_in(static_cast<double>(n), cfg.log_base), cfg.polylog_exp);
  Parameters p;
  if (cfg.target_k) {
    p.k = *cfg.target_k;
  } else {
    const double raw = std::floor(std::sqrt(static_cast<double>(n) * static_cast<double>(d)) / polylog);
    p.k = std::max<std::int64_t>(3, static_cast<std::int64_t>(raw));
  }
  const double raw_b = std::floor(cfg.eps * cfg.eps * static_cast<double>(n) / (static_cast<double>(p.k) * polylog));
  p.b = std::max<std::int64_t>(1, static_cast<std::int64_t>(raw_b));
  p.q = p.k;
  if (p.b * p.q > n)
    throw ParameterError("b*q = " + std::to_string(p.b * p.q) + " exceeds n = " + std::to_string(n) +
                         " (k = " + std::to_string(p.k) + "); choose a smaller k");
  return p;
}

GrowthResult grow_branch_set(const Graph& g, const VertexSet& u, std::int64_t b, std::int64_t theta) {
  require_host(g, u, "U");
  if (b < 1) throw InputError("branch set size must be positive");
  if (static_cast<std::int64_t>(u.size()) < b)
    throw InputError("reservoir has " + std::to_string(u.size()) + " vertices, fewer than b = " + std::to_string(b));
  return grow_from(g, u, {}, b, theta);
}

GrowthResult extend_branch_set(const Graph& g, const VertexSet& u, const VertexSet& start, std::int64_t b,
                               std::int64_t theta) {
  require_host(g, u, "U");
  require_host(g, start, "start set");
  if (start.empty()) throw InputError("start set must be non-empty");
  return grow_from(g, u, start.members(), b, theta);
}

VertexSet carve_nonexpanding(const Graph& g, const VertexSet& u, double eps, std::int64_t cap,
                             const SearchBudget& budget) {
  require_host(g, u, "U");
  const Vertex n = g.vertex_count();
  VertexSet carved(n);
  VertexSet cur = u;
  SearchBudget local = budget;
  cap = std::min<std::int64_t>(cap, static_cast<std::int64_t>(u.size()));
  while (static_cast<std::int64_t>(carved.size()) < cap) {
    const Subgraph sub = induced_subgraph(g, cur);
    const auto room = static_cast<std::size_t>(cap - static_cast<std::int64_t>(carved.size()));
    const std::size_t max_size = std::min(room, cur.size() / 2);
    if (max_size == 0) break;
    const auto w = find_nonexpanding_set(sub.graph, eps, 10, max_size, local);
    if (!w) break;
    const VertexSet host = sub.to_host(*w, n);
    carved.insert_all(host.members());
    cur.erase_all(host.members());
    ++local.seed;
  }
  return carved;
}

VertexSet hitting_connector(const Graph& g, const VertexSet& u, std::span<const VertexSet> targets,
                            const BuilderConfig& cfg, std::mt19937_64& rng) {
  require_host(g, u, "U");
  const Vertex n = g.vertex_count();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    require_host(g, targets[i], "target");
    if (targets[i].empty()) throw InputError("hitting connector: target " + std::to_string(i) + " is empty");
    for (Vertex v : targets[i])
      if (!u.contains(v)) throw InputError("hitting connector: target " + std::to_string(i) + " leaves U");
  }
  VertexSet out(n);
  if (targets.empty()) return out;

  const double d = n > 0 ? 2.0 * static_cast<double>(g.edge_count()) / n : 0.0;
  const double log_n = n > 1 ? log_in(static_cast<double>(n), cfg.log_base) : 1.0;
  const double wanted = std::ceil(std::sqrt(static_cast<double>(n) * d) * std::pow(log_n, cfg.hitting_log_exp));
  std::vector<Vertex> pool(u.begin(), u.end());
  const std::size_t sample = std::min(pool.size(), static_cast<std::size_t>(std::max(1.0, wanted)));
  for (std::size_t i = 0; i < sample; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(sample);
  std::sort(pool.begin(), pool.end());

  const auto in_u = membership(u);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (Vertex x : pool) {
    dist[x] = 0;
    queue.push_back(x);
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (in_u[w] && dist[w] < 0) {
        dist[w] = dist[queue[head]] + 1;
        parent[w] = queue[head];
        queue.push_back(w);
      }

  std::vector<std::uint8_t> in_out(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> members;
  auto mark = [&](Vertex v) {
    if (!in_out[v]) {
      in_out[v] = 1;
      members.push_back(v);
    }
  };
  std::vector<Vertex> anchor(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    Vertex best = -1;
    for (Vertex v : targets[i])
      if (dist[v] >= 0 && (best < 0 || dist[v] < dist[best])) best = v;
    if (best < 0)
      throw HittingFailure("hitting connector: target " + std::to_string(i) + " unreachable inside U", i);
    anchor[i] = best;
    for (Vertex v = best; v >= 0; v = parent[v]) mark(v);
  }

  // Merge the pieces: grow from the piece holding the smallest vertex until
  // another piece is reached, then add the connecting path.
  std::vector<Vertex> from(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  while (true) {
    std::fill(seen.begin(), seen.end(), 0);
    const Vertex root = *std::min_element(members.begin(), members.end());
    std::vector<Vertex> piece{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < piece.size(); ++head)
      for (Vertex w : g.neighbors(piece[head]))
        if (in_out[w] && !seen[w]) {
          seen[w] = 1;
          piece.push_back(w);
        }
    if (piece.size() == members.size()) break;

    std::vector<Vertex> frontier = piece;
    Vertex hit = -1;
    for (Vertex v : piece) from[v] = -1;
    for (std::size_t head = 0; head < frontier.size() && hit < 0; ++head)
      for (Vertex w : g.neighbors(frontier[head])) {
        if (!in_u[w] || seen[w]) continue;
        seen[w] = 1;
        from[w] = frontier[head];
        if (in_out[w]) {
          hit = w;
          break;
        }
        frontier.push_back(w);
      }
    if (hit < 0) {
      std::size_t failing = 0;
      while (failing < targets.size() && seen[anchor[failing]]) ++failing;
      throw HittingFailure("hitting connector: target " + std::to_string(failing) +
                               " lies in another component of the reservoir",
                           failing);
    }
    for (Vertex v = from[hit]; v >= 0 && !in_out[v]; v = from[v]) mark(v);
  }
  out.insert_all(members);
  return out;
}

std::vector<std::size_t> select_clique_family(const Graph& g, std::span<const VertexSet> sets) {
  const std::size_t p = sets.size();
  std::vector<std::int64_t> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < p; ++i) {
    require_host(g, sets[i], "branch set");
    for (Vertex v : sets[i]) {
      if (owner[v] >= 0) throw InputError("family selection: sets overlap at vertex " + std::to_string(v));
      owner[v] = static_cast<std::int64_t>(i);
    }
  }
  std::vector<std::uint8_t> adj(p * p, 0);
  for (const Edge& e : g.edges()) {
    const auto a = owner[e.u];
    const auto b = owner[e.v];
    if (a >= 0 && b >= 0 && a != b) {
      adj[static_cast<std::size_t>(a) * p + static_cast<std::size_t>(b)] = 1;
      adj[static_cast<std::size_t>(b) * p + static_cast<std::size_t>(a)] = 1;
    }
  }
  std::vector<std::size_t> degree(p, 0);
  for (std::size_t i = 0; i < p; ++i)
    degree[i] = static_cast<std::size_t>(std::count(adj.begin() + static_cast<std::ptrdiff_t>(i * p),
                                                    adj.begin() + static_cast<std::ptrdiff_t>((i + 1) * p), 1));
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  std::vector<std::size_t> chosen;
  for (std::size_t i : order) {
    if (sets[i].empty()) continue;
    if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return adj[i * p + c] != 0; }))
      chosen.push_back(i);
  }
  return chosen;
}

MinorCertificate baseline_random_contraction(const Graph& g, std::int64_t k, std::uint64_t seed) {
  const Vertex n = g.vertex_count();
  if (k < 1 || k > n) throw InputError("baseline contraction needs 1 <= k <= n");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> centers(static_cast<std::size_t>(n));
  std::iota(centers.begin(), centers.end(), 0);
  for (std::int64_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(i), centers.size() - 1);
    std::swap(centers[static_cast<std::size_t>(i)], centers[pick(rng)]);
  }
  centers.resize(static_cast<std::size_t>(k));

  std::vector<std::int64_t> label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    label[centers[i]] = static_cast<std::int64_t>(i);
    queue.push_back(centers[i]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (label[w] < 0) {
        label[w] = label[queue[head]];
        queue.push_back(w);
      }

  std::vector<std::vector<Vertex>> cells(static_cast<std::size_t>(k));
  for (Vertex v = 0; v < n; ++v)
    if (label[v] >= 0) cells[static_cast<std::size_t>(label[v])].push_back(v);
  std::vector<VertexSet> sets;
  sets.reserve(cells.size());
  for (const auto& c : cells) sets.emplace_back(n, c);

  MinorCertificate cert;
  for (std::size_t i : select_clique_family(g, sets)) cert.branch_sets.push_back(cells[i]);
  cert.k = static_cast<std::int64_t>(cert.branch_sets.size());
  cert.provenance = {{"method", "baseline_random_contraction"}, {"seed", seed}, {"centers", k}};
  if (!verify_certificate(g, cert).valid) throw InvariantViolation("baseline produced an invalid certificate");
  return cert;
}

}  // namespace minorforge

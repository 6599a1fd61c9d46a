#include "minorforge/generators.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

#include "minorforge/errors.hpp"

namespace minorforge {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v);
}

constexpr int kMaxRestarts = 1000;
constexpr int kRedrawsBeforeScan = 64;

// One pairing pass; false when it gets stuck.
bool try_pairing(Vertex n, std::int32_t d, std::mt19937_64& rng, std::vector<Edge>& edges) {
  std::vector<Vertex> points;
  points.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (Vertex v = 0; v < n; ++v)
    for (std::int32_t i = 0; i < d; ++i) points.push_back(v);
  std::unordered_set<std::uint64_t> used;
  edges.clear();

  auto take = [&](std::size_t a, std::size_t b) {
    const Vertex u = points[a];
    const Vertex v = points[b];
    used.insert(edge_key(u, v));
    edges.push_back({std::min(u, v), std::max(u, v)});
    if (a < b) std::swap(a, b);
    std::swap(points[a], points.back());
    points.pop_back();
    std::swap(points[b], points.back());
    points.pop_back();
  };
  auto suitable = [&](std::size_t a, std::size_t b) {
    return points[a] != points[b] && !used.contains(edge_key(points[a], points[b]));
  };

  while (!points.empty()) {
    bool placed = false;
    for (int attempt = 0; attempt < kRedrawsBeforeScan && !placed; ++attempt) {
      std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
      const std::size_t a = pick(rng);
      const std::size_t b = pick(rng);
      if (a != b && suitable(a, b)) {
        take(a, b);
        placed = true;
      }
    }
    if (placed) continue;
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t a = 0; a < points.size(); ++a)
      for (std::size_t b = a + 1; b < points.size(); ++b)
        if (suitable(a, b)) options.push_back({a, b});
    if (options.empty()) return false;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const auto [a, b] = options[pick(rng)];
    take(a, b);
  }
  return true;
}

template <class T>
T param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key)) throw InputError(std::string("generator parameter '") + key + "' missing");
  try {
    return params.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("generator parameter '") + key + "' has the wrong type");
  }
}

}  // namespace

Graph gen_gnp(Vertex n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("gnp: n must be non-negative");
  if (!(p >= 0 && p <= 1)) throw InputError("gnp: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph gen_random_regular(Vertex n, std::int32_t d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n) throw InputError("random_regular: need 0 <= d < n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) throw InputError("random_regular: n*d must be even");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    if (try_pairing(n, d, rng, edges)) {
      std::sort(edges.begin(), edges.end());
      return Graph::from_edges(n, edges);
    }
  }
  throw CapabilityError("random_regular: pairing failed after 1000 restarts");
}

Graph gen_grid(Vertex rows, Vertex cols) {
  if (rows < 0 || cols < 0) throw InputError("grid: dimensions must be non-negative");
  std::vector<Edge> edges;
  for (Vertex r = 0; r < rows; ++r)
    for (Vertex c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  return Graph::from_edges(rows * cols, edges);
}

Graph gen_hypercube(int dim) {
  if (dim < 0 || dim > 24) throw InputError("hypercube: dimension must lie in [0, 24]");
  const Vertex n = Vertex{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int bit = 0; bit < dim; ++bit) {
      const Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) edges.push_back({v, w});
    }
  return Graph::from_edges(n, edges);
}

Graph gen_complete(Vertex n) {
  if (n < 0) throw InputError("complete: n must be non-negative");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph generate(const std::string& name, const nlohmann::json& params, std::uint64_t seed) {
  if (name == "gnp") return gen_gnp(param<Vertex>(params, "n"), param<double>(params, "p"), seed);
  if (name == "random_regular")
    return gen_random_regular(param<Vertex>(params, "n"), param<std::int32_t>(params, "d"), seed);
  if (name == "grid") return gen_grid(param<Vertex>(params, "rows"), param<Vertex>(params, "cols"));
  if (name == "hypercube") return gen_hypercube(param<int>(params, "dim"));
  if (name == "complete") return gen_complete(param<Vertex>(params, "n"));
  throw InputError("unknown generator '" + name + "'");
}

}  // namespace minorforge

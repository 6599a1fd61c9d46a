#include "fixtures.hpp"

#include <algorithm>
#include <set>

namespace fixtures {

Graph make(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<minorforge::Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

Graph path(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return make(n, e);
}

Graph cycle(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return make(n, e);
}

Graph star(Vertex leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return make(leaves + 1, e);
}

Graph complete(Vertex n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return make(n, e);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.push_back({u, a + v});
  return make(a + b, e);
}

Graph empty(Vertex n) { return make(n, {}); }

Graph prism() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

Graph petersen() {
  return make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                   {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph k4_plus_pendant() { return make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}); }

Graph two_cliques_bridge(Vertex s) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex base : {0, s})
    for (Vertex u = 0; u < s; ++u)
      for (Vertex v = u + 1; v < s; ++v) e.push_back({base + u, base + v});
  e.push_back({s - 1, s});
  return make(2 * s, e);
}

Graph random_graph(Vertex n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p) e.push_back({u, v});
  return make(n, e);
}

Graph random_connected(Vertex n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    e.insert({parent(rng), v});
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p) e.insert({u, v});
  return make(n, {e.begin(), e.end()});
}

}  // namespace fixtures

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "minorforge/graph.hpp"

namespace fixtures {

using minorforge::Graph;
using minorforge::Vertex;

Graph make(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges);
Graph path(Vertex n);
Graph cycle(Vertex n);
Graph star(Vertex leaves);
Graph complete(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);
Graph empty(Vertex n);
/// Two triangles {0,1,2}, {3,4,5} joined by the matching 0-3, 1-4, 2-5.
Graph prism();
Graph petersen();
/// K4 on {0,1,2,3} plus vertex 4 attached to 0.
Graph k4_plus_pendant();
/// Two copies of K_s joined by the edge (s-1, s).
Graph two_cliques_bridge(Vertex s);

/// G(n, p) with a uniformly random spanning tree added, so always connected.
Graph random_connected(Vertex n, double p, std::mt19937_64& rng);
/// Plain G(n, p); may be disconnected.
Graph random_graph(Vertex n, double p, std::mt19937_64& rng);

}  // namespace fixtures

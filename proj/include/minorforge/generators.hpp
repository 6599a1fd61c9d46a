#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "minorforge/graph.hpp"

namespace minorforge {

/// Erdos-Renyi G(n, p).
Graph gen_gnp(Vertex n, double p, std::uint64_t seed);

/// Uniform-ish random d-regular simple graph via the pairing model. Points are
/// paired one random pair at a time; a pair that would create a loop or a
/// repeated edge is redrawn, and the whole pairing restarts only when no
/// valid pair remains (at most 1000 restarts, then CapabilityError).
/// Requires n*d even and 0 <= d < n.
Graph gen_random_regular(Vertex n, std::int32_t d, std::uint64_t seed);

/// rows x cols grid; vertex (r, c) has id r*cols + c.
Graph gen_grid(Vertex rows, Vertex cols);

/// dim-dimensional hypercube, 0 <= dim <= 24.
Graph gen_hypercube(int dim);

Graph gen_complete(Vertex n);

/// Dispatches on a generator name (gnp, random_regular, grid, hypercube,
/// complete) with its parameters as a JSON object of scalars.
Graph generate(const std::string& name, const nlohmann::json& params, std::uint64_t seed);

}  // namespace minorforge

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Edge-list text format:
///
///   # comments and blank lines are skipped anywhere
///   <n> <m>
///   <u> <v>        (m lines, 0-based ids)
///
/// Loops, duplicate edges, bad counts and malformed lines raise InputError
/// naming the offending line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes the canonical form: header, then edges with u < v in ascending order.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

std::uint64_t fnv1a64(std::string_view bytes);

/// FNV-1a 64 over the canonical edge-list text, as 16 lowercase hex digits.
std::string graph_hash(const Graph& g);

}  // namespace minorforge

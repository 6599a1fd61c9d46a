#include "minorforge/edge_list_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "minorforge/errors.hpp"

namespace minorforge {

namespace {

bool is_blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Parses exactly two integers from the line; anything else is an error.
bool parse_pair(const std::string& line, long long& a, long long& b) {
  std::istringstream ss(line);
  if (!(ss >> a >> b)) return false;
  std::string rest;
  return !(ss >> rest);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw InputError("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    long long a = 0;
    long long b = 0;
    if (!parse_pair(line, a, b)) fail(line_no, "expected two integers");
    if (n < 0) {
      if (a < 0 || b < 0) fail(line_no, "negative count in header");
      if (a > (1LL << 30)) fail(line_no, "vertex count too large");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) fail(line_no, "more edges than the header's m=" + std::to_string(m));
    if (a < 0 || b < 0 || a >= n || b >= n) fail(line_no, "vertex id outside [0, " + std::to_string(n) + ")");
    if (a == b) fail(line_no, "self-loop at vertex " + std::to_string(a));
    const auto u = static_cast<Vertex>(std::min(a, b));
    const auto v = static_cast<Vertex>(std::max(a, b));
    const auto key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    if (!seen.insert(key).second) fail(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({u, v});
  }
  if (n < 0) throw InputError("edge list: missing '<n> <m>' header");
  if (static_cast<long long>(edges.size()) != m)
    throw InputError("edge list: header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_edge_list(out, g);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string graph_hash(const Graph& g) {
  std::ostringstream text;
  write_edge_list(text, g);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text.str())));
  return buf;
}

}  // namespace minorforge

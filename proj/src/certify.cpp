#include "minorforge/certify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "minorforge/edge_list_io.hpp"
#include "minorforge/errors.hpp"

namespace minorforge {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::disjointness:
      return "disjointness";
    case ViolationKind::connectivity:
      return "connectivity";
    case ViolationKind::adjacency:
      return "adjacency";
  }
  return "unknown";
}

CertReport verify_certificate(const Graph& g, const MinorCertificate& cert) {
  const Vertex n = g.vertex_count();
  const std::size_t k = cert.branch_sets.size();
  if (cert.k != static_cast<std::int64_t>(k))
    throw InputError("certificate claims k=" + std::to_string(cert.k) + " but lists " + std::to_string(k) +
                     " branch sets");
  for (const auto& set : cert.branch_sets)
    for (Vertex v : set)
      if (v < 0 || v >= n)
        throw InputError("certificate vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");

  CertReport report;
  report.k = cert.k;
  std::vector<std::int64_t> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : cert.branch_sets[i]) {
      if (owner[v] >= 0) {
        report.violations.push_back({ViolationKind::disjointness, {owner[v], static_cast<std::int64_t>(i), v}});
        continue;
      }
      owner[v] = static_cast<std::int64_t>(i);
    }

  std::vector<std::uint8_t> reached(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& set = cert.branch_sets[i];
    bool connected = !set.empty();
    if (connected) {
      std::vector<Vertex> stack{set.front()};
      reached[set.front()] = 1;
      std::size_t count = 1;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
          if (!reached[w] && owner[w] == static_cast<std::int64_t>(i)) {
            reached[w] = 1;
            ++count;
            stack.push_back(w);
          }
      }
      std::size_t owned = 0;
      for (Vertex v : set)
        if (owner[v] == static_cast<std::int64_t>(i)) ++owned;
      connected = count == owned;
      for (Vertex v : set) reached[v] = 0;
    }
    if (!connected) report.violations.push_back({ViolationKind::connectivity, {static_cast<std::int64_t>(i)}});
  }

  std::vector<std::uint8_t> joined(k * k, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (owner[u] < 0) continue;
    for (Vertex w : g.neighbors(u))
      if (owner[w] >= 0 && owner[w] != owner[u])
        joined[static_cast<std::size_t>(owner[u]) * k + static_cast<std::size_t>(owner[w])] = 1;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!joined[i * k + j])
        report.violations.push_back(
            {ViolationKind::adjacency, {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)}});

  report.valid = report.violations.empty();
  return report;
}

namespace {

class HadwigerSearch {
public:
  explicit HadwigerSearch(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v] |= 1u << w;
  }

  int run() {
    best_ = n_ > 0 ? 1 : 0;
    assign(0, 0);
    return best_;
  }

private:
  std::uint32_t open_neighborhood(std::uint32_t mask) const {
    std::uint32_t out = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) out |= adj_[std::countr_zero(rest)];
    return out & ~mask;
  }

  bool connected(std::uint32_t mask) const {
    std::uint32_t seen = mask & (~mask + 1);
    while (true) {
      const std::uint32_t grown = (seen | open_neighborhood(seen)) & mask;
      if (grown == seen) return seen == mask;
      seen = grown;
    }
  }

  bool is_clique_model(int blocks) const {
    for (int i = 0; i < blocks; ++i)
      if (!connected(parts_[i])) return false;
    for (int i = 0; i < blocks; ++i) {
      const std::uint32_t nb = open_neighborhood(parts_[i]);
      for (int j = i + 1; j < blocks; ++j)
        if ((nb & parts_[j]) == 0) return false;
    }
    return true;
  }

  // Vertex v joins one of the existing blocks, opens a new one, or is deleted.
  void assign(int v, int blocks) {
    if (blocks + (n_ - v) <= best_) return;
    if (v == n_) {
      if (is_clique_model(blocks)) best_ = blocks;
      return;
    }
    const std::uint32_t bit = 1u << v;
    parts_[blocks] |= bit;
    assign(v + 1, blocks + 1);
    parts_[blocks] &= ~bit;
    for (int b = 0; b < blocks; ++b) {
      parts_[b] |= bit;
      assign(v + 1, blocks);
      parts_[b] &= ~bit;
    }
    assign(v + 1, blocks);
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::uint32_t parts_[16] = {};
  int best_ = 0;
};

double log_in(double x, double base) { return std::log(x) / std::log(base); }

}  // namespace

int hadwiger_brute(const Graph& g) {
  if (g.vertex_count() > 10) throw CapabilityError("hadwiger_brute is limited to n <= 10");
  return HadwigerSearch(g).run();
}

BoundsReport theoretical_bounds(double n, double d, double t, double alpha, double log_base) {
  if (!(n > 1) || !(d > 0) || !(t > 0) || !(alpha >= 0) || !(log_base > 1))
    throw InputError("theoretical_bounds: need n > 1, d > 0, t > 0, alpha >= 0, log base > 1");
  BoundsReport r;
  r.log_base = log_base;
  const double log_n = log_in(n, log_base);
  const double log_t = std::max(0.0, log_in(t, log_base));
  r.average_degree_minor = std::sqrt(n * t * log_t) / std::sqrt(log_n);
  r.clique_minor_t_alpha = alpha * alpha * r.average_degree_minor;
  r.clique_minor_expanding = std::sqrt(n * d) / std::pow(log_n, 10);
  r.average_degree_minor_vacuous = r.average_degree_minor < 3;
  r.clique_minor_t_alpha_vacuous = r.clique_minor_t_alpha < 3;
  r.clique_minor_expanding_vacuous = r.clique_minor_expanding < 3;
  return r;
}

nlohmann::json to_json(const BoundsReport& r) {
  return {
      {"constants", "all hidden constants set to 1"},
      {"log_base", r.log_base},
      {"average_degree_minor", r.average_degree_minor},
      {"average_degree_minor_vacuous", r.average_degree_minor_vacuous},
      {"clique_minor_t_alpha", r.clique_minor_t_alpha},
      {"clique_minor_t_alpha_vacuous", r.clique_minor_t_alpha_vacuous},
      {"clique_minor_expanding", r.clique_minor_expanding},
      {"clique_minor_expanding_vacuous", r.clique_minor_expanding_vacuous},
  };
}

nlohmann::json certificate_to_json(const MinorCertificate& cert, const Graph& g) {
  return {{"k", cert.k}, {"branch_sets", cert.branch_sets}, {"graph_hash", graph_hash(g)}};
}

MinorCertificate certificate_from_json(const nlohmann::json& doc, const Graph& g) {
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("branch_sets") || !doc.contains("graph_hash"))
    throw InputError("certificate must be an object with k, branch_sets and graph_hash");
  MinorCertificate cert;
  try {
    cert.k = doc.at("k").get<std::int64_t>();
    cert.branch_sets = doc.at("branch_sets").get<std::vector<std::vector<Vertex>>>();
    const auto hash = doc.at("graph_hash").get<std::string>();
    if (hash != graph_hash(g))
      throw InputError("certificate graph_hash " + hash + " does not match the graph (" + graph_hash(g) + ")");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

nlohmann::json to_json(const CertReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : r.violations) violations.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
  return {{"valid", r.valid}, {"k", r.k}, {"violations", violations}};
}

}  // namespace minorforge

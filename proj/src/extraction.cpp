#include "minorforge/extraction.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "minorforge/errors.hpp"

namespace minorforge {

namespace {

Subgraph compose(const Subgraph& outer, Subgraph inner) {
  for (Vertex& id : inner.original_ids) id = outer.original_ids[id];
  return inner;
}

Subgraph identity(const Graph& g) {
  Subgraph s{g, {}};
  s.original_ids.resize(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) s.original_ids[v] = v;
  return s;
}

// d(a) > d(b), exact; the empty graph has density zero.
bool denser(const Graph& a, const Graph& b) {
  if (a.vertex_count() == 0) return false;
  if (b.vertex_count() == 0) return true;
  return average_degree(a) > average_degree(b);
}

Rational density(const Graph& g) { return g.vertex_count() == 0 ? Rational(0) : average_degree(g); }

bool min_degree_at_least_half_average(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  // delta >= m/n  <=>  delta * n >= m
  return static_cast<std::int64_t>(min_degree(g)) * g.vertex_count() >= g.edge_count();
}

}  // namespace

Subgraph peel_min_degree(const Graph& g, const Rational& factor) {
  const Vertex n = g.vertex_count();
  if (n == 0) throw InputError("peel_min_degree: empty graph");
  if (factor <= Rational(0)) throw InputError("peel_min_degree: factor must be positive");

  std::vector<std::int64_t> deg(static_cast<std::size_t>(n));
  std::set<std::pair<std::int64_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<std::uint8_t> removed(static_cast<std::size_t>(n), 0);
  std::int64_t alive = n;
  std::int64_t edges = g.edge_count();
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    // deg < factor * 2m/alive  <=>  deg * alive * den < num * 2m
    const Int128 lhs = static_cast<Int128>(d) * alive * factor.den();
    const Int128 rhs = static_cast<Int128>(factor.num()) * 2 * edges;
    if (!(lhs < rhs)) break;
    queue.erase(queue.begin());
    removed[v] = 1;
    --alive;
    edges -= d;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
  }
  if (alive == 0) throw CapabilityError("peel_min_degree: every vertex was removed");

  VertexSet keep(n);
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) kept.push_back(v);
  keep.insert_all(kept);
  return induced_subgraph(g, keep);
}

ExtractionReport extract_expander(const Graph& g, const RhoParams& p, const SearchBudget& budget) {
  p.validate();
  if (g.vertex_count() == 0) throw InputError("extract_expander: empty graph");
  const Rational half(1, 2);
  const Rational original = average_degree(g);
  const int max_iterations =
      budget.max_iterations > 0
          ? budget.max_iterations
          : std::max(1, static_cast<int>(std::ceil(10 * std::log2(std::max<double>(2, g.vertex_count())))));

  Subgraph current = identity(g);
  ExtractionReport best;
  bool have_best = false;
  int iterations = 0;
  Verdict verdict;

  auto finish = [&](Subgraph h, Verdict v, bool passed) {
    ExtractionReport r;
    r.avg_degree_ratio = original.num() == 0 ? Rational(0) : density(h.graph) * Rational(original.den(), original.num());
    r.min_degree_ok = min_degree_at_least_half_average(h.graph);
    r.expander_verdict = std::move(v);
    r.iterations = iterations;
    r.success = passed && r.avg_degree_ratio >= half;
    r.subgraph = std::move(h);
    return r;
  };

  while (iterations < max_iterations) {
    current = compose(current, peel_min_degree(current.graph, half));
    ++iterations;
    verdict = check_robust_expander(current.graph, p, budget);
    ExtractionReport candidate = finish(current, verdict, verdict.passed);
    if (candidate.success) return candidate;
    if (!have_best || density(candidate.subgraph.graph) > density(best.subgraph.graph)) {
      best = candidate;
      have_best = true;
    }
    if (verdict.passed) break;  // expander, but too sparse relative to G

    const Graph& h = current.graph;
    const VertexSet& x = *verdict.witness;
    const Graph cut = delete_edges(h, *verdict.witness_edges);
    const VertexSet closed = set_union(x, neighborhood(cut, x));
    Subgraph inner = induced_subgraph(h, closed);
    Subgraph outer = delete_vertices(h, x);
    // Ties keep the X side.
    current = compose(current, denser(outer.graph, inner.graph) ? std::move(outer) : std::move(inner));
    if (current.graph.vertex_count() == 0) break;
  }
  best.iterations = iterations;
  best.success = false;
  return best;
}

double calibrate_eps1(const Graph& g, double t, const SearchBudget& budget, double log_base) {
  auto passes = [&](double eps1) { return check_robust_expander(g, RhoParams{eps1, t, log_base}, budget).passed; };
  double lo = 1e-4;
  double hi = 1.0;
  if (passes(hi)) return hi;
  if (!passes(lo)) return 0.0;
  // Bisect in log space until lo and hi agree to two significant digits.
  while (hi / lo > 1.005) {
    const double mid = std::sqrt(lo * hi);
    (passes(mid) ? lo : hi) = mid;
  }
  const double scale = std::pow(10.0, std::floor(std::log10(lo)) - 1);
  const double rounded = std::floor(lo / scale) * scale;
  return rounded > 0 ? rounded : lo;
}

}  // namespace minorforge

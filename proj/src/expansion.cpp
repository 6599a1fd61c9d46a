#include "minorforge/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "growth.hpp"
#include "minorforge/errors.hpp"

namespace minorforge {

using detail::GrowthObjective;
using detail::GrowthTracker;
using detail::MaskGraph;

void RhoParams::validate() const {
  if (!(eps1 > 0) || !std::isfinite(eps1)) throw InputError("rho: eps1 must be positive");
  if (!(t > 0) || !std::isfinite(t)) throw InputError("rho: t must be positive");
  if (!(log_base > 1) || !std::isfinite(log_base)) throw InputError("rho: log base must exceed 1");
}

double rho(double x, const RhoParams& p) {
  if (x < p.t / 5) return 0.0;
  const double l = std::log(15.0 * x / p.t) / std::log(p.log_base);
  return p.eps1 / (l * l);
}

std::string_view to_string(Exactness e) { return e == Exactness::exact ? "exact" : "heuristic"; }

namespace {

// Calls visit(mask, size, boundary_mask) for every subset with size in [lo, hi].
template <class Visit>
void enumerate_subsets(const MaskGraph& mg, int lo, int hi, Visit&& visit) {
  const std::uint32_t total = 1u << mg.n;
  std::vector<std::uint32_t> reach(total, 0);
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    const int low = std::countr_zero(mask);
    reach[mask] = reach[mask & (mask - 1)] | mg.adj[low];
    const int size = std::popcount(mask);
    if (size < lo || size > hi) continue;
    visit(mask, size, reach[mask] & ~mask);
  }
}

bool use_enumeration(Vertex n, Vertex limit) {
  if (limit > kMaxEnumerationOrder)
    throw CapabilityError("exact enumeration limit " + std::to_string(limit) + " exceeds " +
                          std::to_string(kMaxEnumerationOrder));
  return n <= limit;
}

std::size_t floor_size(double value) {
  if (!(value > 0)) return 0;
  return static_cast<std::size_t>(std::floor(value));
}

// Shared search behind vertex expansion, (t, alpha)-expansion and carving:
// non-empty W with |W| <= max_size and divisor*|N(W)| < factor*|W|, most
// violating ratio |N(W)|/|W| preferred.
struct RateSearch {
  std::optional<VertexSet> witness;
  std::uint64_t checked = 0;
  Exactness exactness = Exactness::exact;
};

RateSearch search_low_expansion(const Graph& g, double factor, std::int64_t divisor, std::size_t max_size,
                                const SearchBudget& budget, Vertex exact_limit) {
  RateSearch out;
  const Vertex n = g.vertex_count();
  max_size = std::min(max_size, static_cast<std::size_t>(n));
  if (max_size == 0) return out;

  auto violates = [&](std::int64_t boundary, std::int64_t size) {
    return compare_scaled(divisor * boundary, factor, size) < 0;
  };

  std::optional<Rational> best;
  if (use_enumeration(n, exact_limit)) {
    const MaskGraph mg(g);
    std::uint32_t best_mask = 0;
    enumerate_subsets(mg, 1, static_cast<int>(max_size), [&](std::uint32_t mask, int size, std::uint32_t nb) {
      ++out.checked;
      const std::int64_t boundary = std::popcount(nb);
      if (!violates(boundary, size)) return;
      const Rational score(boundary, size);
      if (!best || score < *best) {
        best = score;
        best_mask = mask;
      }
    });
    if (best) out.witness = detail::mask_to_set(best_mask, n);
    return out;
  }

  out.exactness = Exactness::heuristic;
  GrowthTracker tracker(g);
  std::vector<Vertex> best_members;
  detail::for_each_candidate_order(g, budget, max_size, GrowthObjective::min_boundary,
                                   [&](std::span<const Vertex> order) {
                                     tracker.reset();
                                     for (Vertex v : order) {
                                       tracker.add(v);
                                       ++out.checked;
                                       const auto size = static_cast<std::int64_t>(tracker.size());
                                       if (!violates(tracker.boundary(), size)) continue;
                                       const Rational score(tracker.boundary(), size);
                                       if (!best || score < *best) {
                                         best = score;
                                         best_members.assign(tracker.members().begin(), tracker.members().end());
                                       }
                                     }
                                   });
  if (best) out.witness = VertexSet(n, best_members);
  return out;
}

void verify_rate_witness(const Graph& g, const VertexSet& w, double factor, std::int64_t divisor,
                         std::size_t max_size, const char* what) {
  const auto boundary = static_cast<std::int64_t>(neighborhood(g, w).size());
  const auto size = static_cast<std::int64_t>(w.size());
  if (w.empty() || w.size() > max_size || compare_scaled(divisor * boundary, factor, size) >= 0)
    throw InvariantViolation(std::string(what) + ": witness does not violate the property");
}

Verdict rate_verdict(const Graph& g, double factor, std::size_t max_size, const SearchBudget& budget,
                     const char* what) {
  Verdict v;
  if (max_size == 0) return v;
  RateSearch found = search_low_expansion(g, factor, 1, max_size, budget, budget.exact_n);
  v.exactness = found.exactness;
  v.checked_subsets = found.checked;
  if (found.witness) {
    verify_rate_witness(g, *found.witness, factor, 1, max_size, what);
    v.passed = false;
    v.witness = std::move(found.witness);
  }
  return v;
}

// Cheapest-first adversary: cuts every edge to the external neighbors with the
// fewest edges into X while the budget lasts. Returns the cut edges.
std::vector<Edge> adversarial_cut(const Graph& g, const VertexSet& x, double edge_budget) {
  std::vector<std::pair<std::int32_t, Vertex>> by_cost;
  for (Vertex w : neighborhood(g, x)) {
    std::int32_t c = 0;
    for (Vertex u : g.neighbors(w))
      if (x.contains(u)) ++c;
    by_cost.push_back({c, w});
  }
  std::sort(by_cost.begin(), by_cost.end());
  std::vector<Edge> cut;
  double remaining = edge_budget;
  for (auto [cost, w] : by_cost) {
    if (static_cast<double>(cost) > remaining) break;
    remaining -= cost;
    for (Vertex u : g.neighbors(w))
      if (x.contains(u)) cut.push_back({std::min(u, w), std::max(u, w)});
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

}  // namespace

Verdict check_vertex_expansion(const Graph& g, double eps, const SearchBudget& budget) {
  if (!(eps > 0) || !std::isfinite(eps)) throw InputError("vertex expansion: eps must be positive");
  return rate_verdict(g, eps, static_cast<std::size_t>(g.vertex_count() / 2), budget, "vertex expansion");
}

Verdict check_t_alpha_expanding(const Graph& g, double t, double alpha, const SearchBudget& budget) {
  if (!(t > 0) || !std::isfinite(t)) throw InputError("(t, alpha)-expansion: t must be positive");
  if (!(alpha > 0) || !(alpha < 1)) throw InputError("(t, alpha)-expansion: alpha must lie in (0, 1)");
  const std::size_t max_size = floor_size(alpha * static_cast<double>(g.vertex_count()) / t);
  return rate_verdict(g, t, max_size, budget, "(t, alpha)-expansion");
}

Verdict check_locally_sparse(const Graph& g, double eps, const SearchBudget& budget) {
  if (!(eps > 0) || !std::isfinite(eps)) throw InputError("local sparsity: eps must be positive");
  Verdict v;
  const Vertex n = g.vertex_count();
  const std::size_t max_size = std::min(floor_size(eps * static_cast<double>(n)), static_cast<std::size_t>(n));
  if (max_size == 0) return v;
  const std::int64_t d = min_degree(g);

  // dense: 2e(U) > eps * d * |U|
  auto violates = [&](std::int64_t internal, std::int64_t size) {
    return compare_scaled(2 * internal, eps, d * size) > 0;
  };
  std::optional<Rational> best;

  if (use_enumeration(n, budget.exact_n)) {
    const MaskGraph mg(g);
    const std::uint32_t total = 1u << mg.n;
    std::vector<std::int32_t> internal(total, 0);
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      const int low = std::countr_zero(mask);
      const std::uint32_t rest = mask & (mask - 1);
      internal[mask] = internal[rest] + std::popcount(mg.adj[low] & rest);
      const int size = std::popcount(mask);
      if (static_cast<std::size_t>(size) > max_size) continue;
      ++v.checked_subsets;
      if (!violates(internal[mask], size)) continue;
      const Rational density(2 * internal[mask], size);
      if (!best || density > *best) {
        best = density;
        best_mask = mask;
      }
    }
    if (best) v.witness = detail::mask_to_set(best_mask, n);
  } else {
    v.exactness = Exactness::heuristic;
    GrowthTracker tracker(g);
    std::vector<Vertex> best_members;
    detail::for_each_candidate_order(g, budget, max_size, GrowthObjective::max_density,
                                     [&](std::span<const Vertex> order) {
                                       tracker.reset();
                                       for (Vertex u : order) {
                                         tracker.add(u);
                                         ++v.checked_subsets;
                                         const auto size = static_cast<std::int64_t>(tracker.size());
                                         if (!violates(tracker.internal_edges(), size)) continue;
                                         const Rational density(2 * tracker.internal_edges(), size);
                                         if (!best || density > *best) {
                                           best = density;
                                           best_members.assign(tracker.members().begin(), tracker.members().end());
                                         }
                                       }
                                     });
    if (best) v.witness = VertexSet(n, best_members);
  }

  if (v.witness) {
    const auto size = static_cast<std::int64_t>(v.witness->size());
    if (size == 0 || static_cast<std::size_t>(size) > max_size ||
        !violates(internal_edge_count(g, *v.witness), size))
      throw InvariantViolation("local sparsity: witness does not violate the property");
    v.passed = false;
  }
  return v;
}

Verdict check_robust_expander(const Graph& g, const RhoParams& p, const SearchBudget& budget) {
  p.validate();
  Verdict v;
  const Vertex n = g.vertex_count();
  const auto lo = static_cast<std::size_t>(std::max(1.0, std::ceil(p.t / 2)));
  const auto hi = static_cast<std::size_t>(n / 2);
  if (n == 0 || lo > hi) return v;
  const double avg_degree = average_degree(g).to_double();

  // Lower is more violating; only meaningful when survivors < rho*|X|.
  auto assess = [&](std::int64_t survivors, std::size_t size) -> std::optional<double> {
    const double need = rho(static_cast<double>(size), p) * static_cast<double>(size);
    if (!(static_cast<double>(survivors) < need)) return std::nullopt;
    return static_cast<double>(survivors) / need;
  };
  auto edge_budget = [&](std::size_t size) {
    return avg_degree * rho(static_cast<double>(size), p) * static_cast<double>(size);
  };

  std::optional<double> best;
  if (use_enumeration(n, budget.exact_n_robust)) {
    const MaskGraph mg(g);
    std::uint32_t best_mask = 0;
    std::vector<std::int64_t> hist(static_cast<std::size_t>(max_degree(g)) + 2, 0);
    enumerate_subsets(mg, static_cast<int>(lo), static_cast<int>(hi), [&](std::uint32_t mask, int size,
                                                                          std::uint32_t nb) {
      ++v.checked_subsets;
      std::fill(hist.begin(), hist.end(), 0);
      for (std::uint32_t rest = nb; rest; rest &= rest - 1) ++hist[std::popcount(mg.adj[std::countr_zero(rest)] & mask)];
      double remaining = edge_budget(static_cast<std::size_t>(size));
      std::int64_t survivors = std::popcount(nb);
      for (std::size_t cost = 1; cost < hist.size() && static_cast<double>(cost) <= remaining; ++cost) {
        const std::int64_t take =
            std::min(hist[cost], static_cast<std::int64_t>(std::floor(remaining / static_cast<double>(cost))));
        survivors -= take;
        remaining -= static_cast<double>(take * static_cast<std::int64_t>(cost));
      }
      const auto score = assess(survivors, static_cast<std::size_t>(size));
      if (score && (!best || *score < *best)) {
        best = score;
        best_mask = mask;
      }
    });
    if (best) v.witness = detail::mask_to_set(best_mask, n);
  } else {
    v.exactness = Exactness::heuristic;
    GrowthTracker tracker(g);
    std::vector<Vertex> best_members;
    detail::for_each_candidate_order(g, budget, hi, GrowthObjective::min_boundary, [&](std::span<const Vertex> order) {
      tracker.reset();
      for (Vertex u : order) {
        tracker.add(u);
        if (tracker.size() < lo) continue;
        ++v.checked_subsets;
        const auto score = assess(tracker.survivors_after_cut(edge_budget(tracker.size())), tracker.size());
        if (score && (!best || *score < *best)) {
          best = score;
          best_members.assign(tracker.members().begin(), tracker.members().end());
        }
      }
    });
    if (best) v.witness = VertexSet(n, best_members);
  }

  if (v.witness) {
    const std::size_t size = v.witness->size();
    const double allowed = edge_budget(size);
    std::vector<Edge> cut = adversarial_cut(g, *v.witness, allowed);
    const Graph remaining = delete_edges(g, cut);
    const auto survivors = static_cast<double>(neighborhood(remaining, *v.witness).size());
    if (size < lo || size > hi || static_cast<double>(cut.size()) > allowed ||
        !(survivors < rho(static_cast<double>(size), p) * static_cast<double>(size)))
      throw InvariantViolation("robust expansion: witness does not violate the property");
    v.passed = false;
    v.witness_edges = std::move(cut);
  }
  return v;
}

Rational vertex_expansion_constant(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n < 2) throw InputError("vertex expansion constant needs at least two vertices");
  if (n > 20) throw CapabilityError("vertex expansion constant is exponential; n <= 20 required");
  const MaskGraph mg(g);
  std::optional<Rational> best;
  enumerate_subsets(mg, 1, n / 2, [&](std::uint32_t, int size, std::uint32_t nb) {
    const Rational r(std::popcount(nb), size);
    if (!best || r < *best) best = r;
  });
  return *best;
}

std::optional<VertexSet> find_nonexpanding_set(const Graph& g, double eps, std::int64_t divisor,
                                               std::size_t max_size, const SearchBudget& budget) {
  if (!(eps > 0) || divisor <= 0) throw InputError("non-expanding search: eps and divisor must be positive");
  RateSearch found = search_low_expansion(g, eps, divisor, max_size, budget, budget.exact_n);
  if (found.witness) verify_rate_witness(g, *found.witness, eps, divisor, max_size, "non-expanding search");
  return std::move(found.witness);
}

}  // namespace minorforge

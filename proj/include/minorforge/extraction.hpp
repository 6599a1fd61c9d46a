#pragma once

#include <vector>

#include "minorforge/expansion.hpp"
#include "minorforge/graph.hpp"
#include "minorforge/rational.hpp"

namespace minorforge {

/// Repeatedly deletes a minimum-degree vertex while its degree is below
/// factor * d(current graph). For factor <= 1/2 the average degree never
/// drops and the residue is non-empty; an empty residue raises CapabilityError.
Subgraph peel_min_degree(const Graph& g, const Rational& factor);

struct ExtractionReport {
  Subgraph subgraph;
  /// d(H) / d(G); zero when G has no edges.
  Rational avg_degree_ratio;
  /// delta(H) >= d(H)/2, checked exactly.
  bool min_degree_ok = false;
  Verdict expander_verdict;
  int iterations = 0;
  /// Final candidate passed the expander check and d(H) >= d(G)/2.
  bool success = false;
};

/// Refines G towards a robust (eps1, t)-expander of comparable density:
/// peel to min degree >= d/2, look for a violating set X (with the
/// adversary's edge set F), and move to the denser of H[X ∪ N_{H-F}(X)] and
/// H - X, until the checker finds nothing or the iteration budget runs out.
/// Without success the densest candidate seen is returned.
ExtractionReport extract_expander(const Graph& g, const RhoParams& p, const SearchBudget& budget = {});

/// Largest eps1 in [1e-4, 1] (two significant digits, rounded down) for which
/// the robust check finds no violation; 0 when even 1e-4 fails.
double calibrate_eps1(const Graph& g, double t, const SearchBudget& budget = {}, double log_base = 2.0);

}  // namespace minorforge

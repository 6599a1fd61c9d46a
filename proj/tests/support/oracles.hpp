#pragma once

#include <cstdint>
#include <vector>

#include "minorforge/graph.hpp"
#include "minorforge/rational.hpp"

// Brute-force reference implementations, written without the library's
// search code. Every subset is visited; comparisons use integers only.
namespace oracle {

using minorforge::Graph;
using minorforge::Rational;
using minorforge::Vertex;

/// Every non-empty U, |U| <= floor(n/2): |N(U)| >= eps |U|.
bool vertex_expansion(const Graph& g, const Rational& eps);
/// Every non-empty X, |X| <= floor(alpha n / t): |N(X)| >= t |X|.
bool t_alpha_expanding(const Graph& g, const Rational& t, const Rational& alpha);
/// Every non-empty U, |U| <= floor(eps n): 2 e(U) <= eps * delta * |U|.
bool locally_sparse(const Graph& g, const Rational& eps);
/// min |N(U)| / |U| over non-empty U with |U| <= floor(n/2).
Rational expansion_constant(const Graph& g);

/// Robust expansion with every adversarial edge set enumerated explicitly.
/// Practical for n <= 10 and small edge budgets.
bool robust_expander(const Graph& g, double eps1, double t, double log_base);

/// Hadwiger number by exhausting contractions and deletions with
/// memoisation on the canonical edge set. Practical for n <= 7.
int hadwiger_by_minors(const Graph& g);

/// Certificate check: sort-based disjointness, union-find connectivity,
/// per-pair edge scan.
bool clique_minor_valid(const Graph& g, const std::vector<std::vector<Vertex>>& sets);

/// Floyd-Warshall distances in G - forbidden (forbidden[v] != 0); -1 when unreachable.
std::vector<std::vector<int>> distances(const Graph& g, const std::vector<char>& forbidden);

}  // namespace oracle

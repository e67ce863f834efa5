#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tokensign/rational.hpp"
#include "tokensign/signed_graph.hpp"

namespace tokensign {

inline constexpr int kDefaultFrustrationGuard = 24;
inline constexpr long kDefaultBoundsGuard = 16;

struct FrustrationResult {
  int index = 0;
  SwitchingVector witness;
  std::vector<Edge> removed_edges;  // negative edges of g switched by witness, in g's labels
};

/// Exhaustive minimum of negative edges over all switchings, the lowest
/// vertex of each component pinned to +1. Ties go to the vector that is
/// lexicographically smallest with +1 before -1. Throws TooLarge when more
/// than `max_vertices` vertices.
FrustrationResult frustration_index(const SignedGraph& g, int max_vertices = kDefaultFrustrationGuard);

struct TraceTable {
  std::vector<BigInt> unsigned_traces;  // tr (A+)^r, r = 0..n
  std::vector<BigInt> signed_traces;    // tr A^r
};

TraceTable trace_table(const SignedGraph& g, int max_power);

/// ratio of sum_{r<=m} [tr(A+)^r - tr A^r] to sum_{r<=m} [tr(A+)^r + |tr A^r|].
Rational unbalance_level_m(const SignedGraph& g, int m);
Rational unbalance_level_m(const TraceTable& t, int m);

struct UnbalanceResult {
  Rational ell_n_minus_1;
  Rational ell_n;
  Rational ell;
  TraceTable traces;
};

UnbalanceResult unbalance_level(const SignedGraph& g);

struct FrustrationBounds {
  int k = 0;
  int base = 0;         // l(g)
  int token = 0;        // l(F_k(g))
  std::int64_t upper = 0;  // C(n-2, k-1) l(g)
  bool lower_holds = false;
  bool upper_holds = false;
  bool holds() const { return lower_holds && upper_holds; }
};

/// Throws TooLarge when C(n, k) exceeds `max_token_vertices`.
FrustrationBounds check_frustration_bounds(const SignedGraph& g, int k,
                                           long max_token_vertices = kDefaultBoundsGuard);

struct ExplorerOptions {
  long trials = 100;
  int n_min = 3;
  int n_max = 6;
  int k = 2;
  std::uint64_t seed = 0;
  bool balanced_only = false;  // first graph of each pair is balanced
};

/// One sampled pair (g, g') on the same underlying graph with l(g) <= l(g').
struct ExplorerSample {
  SignedGraph first;
  SignedGraph second;
  int k = 0;
  FrustrationResult first_frustration;
  FrustrationResult second_frustration;
  FrustrationResult first_token_frustration;
  FrustrationResult second_token_frustration;
  Rational first_ell;
  Rational second_ell;
  Rational first_token_ell;
  Rational second_token_ell;
  bool statement1 = true;  // ell(g) <= ell(F_k g) and the same for g'
  bool statement2 = true;  // l(F_k g) <= l(F_k g')
  bool statement3 = true;  // ell(F_k g) <= ell(F_k g')
  bool all_hold() const { return statement1 && statement2 && statement3; }
};

struct ExplorerReport {
  ExplorerOptions options;
  long trials_run = 0;
  long statement1_violations = 0;
  long statement2_violations = 0;
  long statement3_violations = 0;
  std::vector<ExplorerSample> counterexamples;
  Rational max_ell;
  std::optional<SignedGraph> max_ell_graph;
};

/// Evaluates the three monotonicity statements on a pair of signed graphs
/// sharing an underlying graph, swapping them first if l(g) > l(g').
ExplorerSample evaluate_pair(const SignedGraph& g, const SignedGraph& h, int k);

/// Samples G(n, 1/2) underlying graphs with n uniform in [n_min, n_max] and
/// independent fair-coin signs. Deterministic for a given seed.
ExplorerReport explore_monotonicity(const ExplorerOptions& options);

}  // namespace tokensign

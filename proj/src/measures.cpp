#include "tokensign/measures.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "tokensign/error.hpp"
#include "tokensign/matrix.hpp"
#include "tokensign/token.hpp"

namespace tokensign {

FrustrationResult frustration_index(const SignedGraph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices || n > 62) {
    throw Error(ErrorCode::TooLarge, "frustration enumeration limited to " + std::to_string(std::min(max_vertices, 62)) +
                                         " vertices, got " + std::to_string(n));
  }
  const SpanningForest forest = spanning_forest(g);
  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < n; ++v) {
    if (forest.root[static_cast<std::size_t>(v)] != v) free_vertices.push_back(v);
  }

  // Incremental state under the current switching.
  std::vector<int> flipped(static_cast<std::size_t>(n), 0);
  std::vector<int> negative_at(static_cast<std::size_t>(n), 0);
  int negatives = 0;
  for (const Edge& e : g.edges()) {
    if (e.sign == Sign::negative) {
      ++negatives;
      ++negative_at[static_cast<std::size_t>(e.u)];
      ++negative_at[static_cast<std::size_t>(e.v)];
    }
  }
  auto key_bit = [n](Vertex v) { return std::uint64_t{1} << (n - 1 - v); };

  int best = negatives;
  std::uint64_t best_key = 0;
  std::uint64_t key = 0;
  const int t = static_cast<int>(free_vertices.size());
  const std::uint64_t steps = std::uint64_t{1} << t;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const Vertex v = free_vertices[static_cast<std::size_t>(std::countr_zero(i))];
    auto& nv = negative_at[static_cast<std::size_t>(v)];
    negatives += g.degree(v) - 2 * nv;
    nv = g.degree(v) - nv;
    const int sv = flipped[static_cast<std::size_t>(v)] ^= 1;
    for (const Neighbor& nb : g.neighbors(v)) {
      const bool now_negative =
          (nb.sign == Sign::negative) != (sv != flipped[static_cast<std::size_t>(nb.vertex)]);
      negative_at[static_cast<std::size_t>(nb.vertex)] += now_negative ? 1 : -1;
    }
    key ^= key_bit(v);
    if (negatives < best || (negatives == best && key < best_key)) {
      best = negatives;
      best_key = key;
    }
  }

  FrustrationResult out;
  out.index = best;
  std::vector<Sign> signs(static_cast<std::size_t>(n), Sign::positive);
  for (Vertex v = 0; v < n; ++v) {
    if (best_key & key_bit(v)) signs[static_cast<std::size_t>(v)] = Sign::negative;
  }
  out.witness = SwitchingVector(std::move(signs));
  for (const Edge& e : g.edges()) {
    if (out.witness[e.u] * e.sign * out.witness[e.v] == Sign::negative) out.removed_edges.push_back(e);
  }
  return out;
}

TraceTable trace_table(const SignedGraph& g, int max_power) {
  return {power_traces(unsigned_adjacency(g), max_power), power_traces(adjacency(g), max_power)};
}

Rational unbalance_level_m(const TraceTable& t, int m) {
  if (m < 0 || m >= static_cast<int>(t.signed_traces.size())) {
    throw Error(ErrorCode::SizeMismatch, "trace table too short for m = " + std::to_string(m));
  }
  BigInt num = 0;
  BigInt den = 0;
  for (int r = 0; r <= m; ++r) {
    const BigInt& plus = t.unsigned_traces[static_cast<std::size_t>(r)];
    const BigInt& sgn = t.signed_traces[static_cast<std::size_t>(r)];
    num += plus - sgn;
    den += plus + abs(sgn);
  }
  if (den == 0) return Rational();
  return Rational(std::move(num), std::move(den));
}

Rational unbalance_level_m(const SignedGraph& g, int m) {
  if (m < 0) throw Error(ErrorCode::SizeMismatch, "m must be non-negative");
  return unbalance_level_m(trace_table(g, m), m);
}

UnbalanceResult unbalance_level(const SignedGraph& g) {
  const int n = g.order();
  UnbalanceResult out;
  out.traces = trace_table(g, n);
  out.ell_n_minus_1 = n >= 1 ? unbalance_level_m(out.traces, n - 1) : Rational();
  out.ell_n = unbalance_level_m(out.traces, n);
  out.ell = std::max(out.ell_n_minus_1, out.ell_n);
  return out;
}

FrustrationBounds check_frustration_bounds(const SignedGraph& g, int k, long max_token_vertices) {
  const int n = g.order();
  if (k < 1 || k > n - 1) throw Error(ErrorCode::KOutOfRange, "k must satisfy 1 <= k <= n-1");
  if (binomial(n, k) > max_token_vertices) {
    throw Error(ErrorCode::TooLarge, "token graph has C(" + std::to_string(n) + "," + std::to_string(k) +
                                         ") vertices, above the limit of " + std::to_string(max_token_vertices));
  }
  FrustrationBounds b;
  b.k = k;
  b.base = frustration_index(g).index;
  b.token = frustration_index(token_graph(g, k).graph, static_cast<int>(max_token_vertices)).index;
  b.upper = binomial(n - 2, k - 1) * b.base;
  b.lower_holds = b.base <= b.token;
  b.upper_holds = b.token <= b.upper;
  return b;
}

ExplorerSample evaluate_pair(const SignedGraph& g, const SignedGraph& h, int k) {
  if (!g.same_underlying(h)) throw Error(ErrorCode::UnderlyingMismatch, "pair must share the underlying graph");
  ExplorerSample s;
  s.k = k;
  s.first = g;
  s.second = h;
  s.first_frustration = frustration_index(g);
  s.second_frustration = frustration_index(h);
  if (s.first_frustration.index > s.second_frustration.index) {
    std::swap(s.first, s.second);
    std::swap(s.first_frustration, s.second_frustration);
  }
  const SignedGraph f1 = token_graph(s.first, k).graph;
  const SignedGraph f2 = token_graph(s.second, k).graph;
  s.first_token_frustration = frustration_index(f1);
  s.second_token_frustration = frustration_index(f2);
  s.first_ell = unbalance_level(s.first).ell;
  s.second_ell = unbalance_level(s.second).ell;
  s.first_token_ell = unbalance_level(f1).ell;
  s.second_token_ell = unbalance_level(f2).ell;
  s.statement1 = s.first_ell <= s.first_token_ell && s.second_ell <= s.second_token_ell;
  s.statement2 = s.first_token_frustration.index <= s.second_token_frustration.index;
  s.statement3 = s.first_token_ell <= s.second_token_ell;
  return s;
}

ExplorerReport explore_monotonicity(const ExplorerOptions& options) {
  if (options.n_min < 2 || options.n_max < options.n_min) {
    throw Error(ErrorCode::NTooSmall, "need 2 <= n_min <= n_max");
  }
  if (options.k < 1 || options.k > options.n_min - 1) {
    throw Error(ErrorCode::KOutOfRange, "k must satisfy 1 <= k <= n_min - 1");
  }
  ExplorerReport report;
  report.options = options;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> order(options.n_min, options.n_max);
  std::bernoulli_distribution coin(0.5);
  auto random_sign = [&] { return coin(rng) ? Sign::negative : Sign::positive; };

  for (long t = 0; t < options.trials; ++t) {
    const int n = order(rng);
    std::vector<Edge> first;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) first.push_back({u, v, Sign::positive});
      }
    }
    std::vector<Edge> second = first;
    if (options.balanced_only) {
      std::vector<Sign> s(static_cast<std::size_t>(n));
      for (auto& x : s) x = random_sign();
      for (Edge& e : first) e.sign = s[static_cast<std::size_t>(e.u)] * s[static_cast<std::size_t>(e.v)];
    } else {
      for (Edge& e : first) e.sign = random_sign();
    }
    for (Edge& e : second) e.sign = random_sign();

    ExplorerSample sample = evaluate_pair(SignedGraph(n, std::move(first)), SignedGraph(n, std::move(second)), options.k);
    ++report.trials_run;
    report.statement1_violations += sample.statement1 ? 0 : 1;
    report.statement2_violations += sample.statement2 ? 0 : 1;
    report.statement3_violations += sample.statement3 ? 0 : 1;
    for (const auto* cand : {&sample.first, &sample.second}) {
      const Rational& ell = cand == &sample.first ? sample.first_ell : sample.second_ell;
      if (!report.max_ell_graph || ell > report.max_ell) {
        report.max_ell = ell;
        report.max_ell_graph = *cand;
      }
    }
    if (!sample.all_hold()) report.counterexamples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace tokensign

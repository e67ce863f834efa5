#pragma once

// Random instances and brute-force oracles shared by the test binaries.
// Oracles deliberately avoid the library's own algorithms: plain int64 dense
// products, exhaustive switchings, pairwise subset comparison.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tokensign/matrix.hpp"
#include "tokensign/rational.hpp"
#include "tokensign/signed_graph.hpp"

namespace testing {

using tokensign::Edge;
using tokensign::Sign;
using tokensign::SignedGraph;
using tokensign::SwitchingVector;
using tokensign::Vertex;
using Dense = std::vector<std::vector<std::int64_t>>;

inline SignedGraph random_graph(std::mt19937_64& rng, int n, double p_edge = 0.5, double p_negative = 0.5) {
  std::bernoulli_distribution edge(p_edge);
  std::bernoulli_distribution neg(p_negative);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.push_back({u, v, neg(rng) ? Sign::negative : Sign::positive});
    }
  }
  return SignedGraph(n, std::move(edges));
}

/// Random signature on a fixed underlying graph.
inline SignedGraph random_signature(std::mt19937_64& rng, const SignedGraph& g) {
  std::bernoulli_distribution neg(0.5);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = neg(rng) ? Sign::negative : Sign::positive;
  return SignedGraph(g.order(), std::move(edges));
}

/// All-positive random graph under a random switching, hence balanced.
inline SignedGraph random_balanced(std::mt19937_64& rng, int n, double p_edge = 0.5) {
  SignedGraph g = random_graph(rng, n, p_edge, 0.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> s(static_cast<std::size_t>(n));
  for (Sign& x : s) x = coin(rng) ? Sign::negative : Sign::positive;
  return tokensign::apply_switching(g, SwitchingVector(s));
}

inline SwitchingVector random_switching(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> s(static_cast<std::size_t>(n));
  for (Sign& x : s) x = coin(rng) ? Sign::negative : Sign::positive;
  return SwitchingVector(s);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Dense dense_adjacency(const SignedGraph& g, bool unsigned_graph = false) {
  Dense a(static_cast<std::size_t>(g.order()), std::vector<std::int64_t>(static_cast<std::size_t>(g.order()), 0));
  for (const Edge& e : g.edges()) {
    const std::int64_t s = unsigned_graph ? 1 : tokensign::to_int(e.sign);
    a[e.u][e.v] = s;
    a[e.v][e.u] = s;
  }
  return a;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) c[i][j] += a[i][t] * b[t][j];
  return c;
}

/// tr(M^0) .. tr(M^m) by repeated dense products (small graphs only).
inline std::vector<std::int64_t> naive_traces(const Dense& a, int m) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> out;
  Dense p(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  for (int r = 0; r <= m; ++r) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) t += p[i][i];
    out.push_back(t);
    p = dense_mul(p, a);
  }
  return out;
}

/// Unbalance level straight from the definition.
inline tokensign::Rational naive_unbalance(const SignedGraph& g) {
  const int n = g.order();
  const auto plus = naive_traces(dense_adjacency(g, true), n);
  const auto sgn = naive_traces(dense_adjacency(g), n);
  auto level = [&](int m) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    for (int r = 0; r <= m; ++r) {
      num += plus[r] - sgn[r];
      den += plus[r] + (sgn[r] < 0 ? -sgn[r] : sgn[r]);
    }
    return den == 0 ? tokensign::Rational() : tokensign::Rational(tokensign::BigInt(num), tokensign::BigInt(den));
  };
  return std::max(level(n - 1), level(n));
}

/// Minimum negative edges over all 2^n switchings (no pinning, no Gray code).
inline int naive_frustration(const SignedGraph& g) {
  const int n = g.order();
  int best = g.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    int neg = 0;
    for (const Edge& e : g.edges()) {
      const bool flip = ((bits >> e.u) & 1U) != ((bits >> e.v) & 1U);
      if ((e.sign == Sign::negative) != flip) ++neg;
    }
    best = std::min(best, neg);
  }
  return best;
}

inline bool naive_balanced(const SignedGraph& g) { return naive_frustration(g) == 0; }

/// All k-subsets of {0..n-1} as sorted vectors, lexicographic.
inline std::vector<std::vector<Vertex>> naive_subsets(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Token graph by comparing every pair of k-subsets.
inline SignedGraph naive_token_graph(const SignedGraph& g, int k) {
  const auto subsets = naive_subsets(g.order(), k);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      std::vector<Vertex> only_i;
      std::vector<Vertex> only_j;
      std::set_difference(subsets[i].begin(), subsets[i].end(), subsets[j].begin(), subsets[j].end(),
                          std::back_inserter(only_i));
      std::set_difference(subsets[j].begin(), subsets[j].end(), subsets[i].begin(), subsets[i].end(),
                          std::back_inserter(only_j));
      if (only_i.size() != 1) continue;
      if (auto s = g.sign(only_i[0], only_j[0])) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), *s});
      }
    }
  }
  return SignedGraph(static_cast<int>(subsets.size()), std::move(edges));
}

/// Rank over the rationals by Gaussian elimination.
inline int rational_rank(const tokensign::ExactMatrix& m) {
  using tokensign::Rational;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m.rows()),
                                       std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (int c = col; c < m.cols(); ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// det(x I - M) at integer x by rational elimination.
inline tokensign::Rational det_shifted(const tokensign::ExactMatrix& m, long x) {
  using tokensign::Rational;
  const int n = m.rows();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(tokensign::BigInt((i == j ? x : 0)) - m(i, j));
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Rational f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Is there any relabeling and switching taking g onto h? Relabelings are
/// restricted to automorphisms of the common underlying graph, switchings
/// are tried exhaustively.
inline bool naive_switching_isomorphic(const SignedGraph& g, const SignedGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const int n = g.order();
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool automorphic = true;
    for (const Edge& e : g.edges()) {
      if (!h.has_edge(p[e.u], p[e.v])) {
        automorphic = false;
        break;
      }
    }
    if (!automorphic) continue;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); bits += 2) {
      bool match = true;
      for (const Edge& e : g.edges()) {
        const bool flip = ((bits >> e.u) & 1U) != ((bits >> e.v) & 1U);
        const Sign s = flip ? -e.sign : e.sign;
        if (*h.sign(p[e.u], p[e.v]) != s) {
          match = false;
          break;
        }
      }
      if (match) return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every simple cycle once, listed from its smallest vertex with the second
/// vertex smaller than the last.
inline std::vector<std::vector<Vertex>> naive_cycles(const SignedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
    for (const auto& nb : g.neighbors(v)) {
      if (nb.vertex == start && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (nb.vertex <= start || used[nb.vertex]) continue;
      used[nb.vertex] = true;
      path.push_back(nb.vertex);
      self(self, start, nb.vertex);
      path.pop_back();
      used[nb.vertex] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    used.assign(static_cast<std::size_t>(n), false);
    used[s] = true;
    dfs(dfs, s, s);
  }
  return out;
}

}  // namespace testing

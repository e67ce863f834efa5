#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tokensign/matrix.hpp"
#include "tokensign/signed_graph.hpp"

namespace tokensign {

inline constexpr long kDefaultTokenCap = 200000;

/// C(n, k) with saturation at INT64_MAX; 0 outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

/// k-subsets of {0..n-1} ranked in lexicographic order (01, 02, 03, 12, ...).
class SubsetIndex {
 public:
  SubsetIndex() = default;
  SubsetIndex(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  long size() const noexcept { return static_cast<long>(masks_.size()); }

  std::uint64_t mask(long rank) const { return masks_[static_cast<std::size_t>(rank)]; }
  std::vector<Vertex> unrank(long rank) const;
  long rank(std::uint64_t mask) const;
  long rank(std::span<const Vertex> subset) const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint64_t> masks_;
};

/// "{1,3}" (1-based).
std::string subset_label(std::span<const Vertex> subset);

struct TokenSignedGraph {
  SignedGraph base;
  int k = 0;
  SubsetIndex index;
  SignedGraph graph;
};

/// Throws KOutOfRange unless 1 <= k <= n-1 and SizeCapExceeded when
/// C(n, k) > cap or n > 64.
TokenSignedGraph token_graph(const SignedGraph& g, int k, long cap = kDefaultTokenCap);

/// Token vertex A gets +1 iff |A ∩ U| is even, U the +1 set of s.
SwitchingVector lift_switching(const SwitchingVector& s, int k, long cap = kDefaultTokenCap);

/// Token vertex A gets the product of s over A. Equals lift_switching up to
/// the global sign (-1)^k, and equals s itself for k = 1.
SwitchingVector product_switching(const SwitchingVector& s, int k, long cap = kDefaultTokenCap);

struct BinomialMatrix {
  int n = 0;
  int k1 = 0;
  int k2 = 0;
  bool is_signed = false;
  ExactMatrix entries;  // C(n,k2) x C(n,k1)
};

/// Entry (A, X) is 1 iff X ⊂ A. Requires 1 <= k1 < k2 < n.
BinomialMatrix binomial_matrix(int n, int k1, int k2);
/// S_{k2} B S_{k1} with both switchings taken by product_switching from
/// balance_check(g).
BinomialMatrix signed_binomial_matrix(const SignedGraph& g, int k1, int k2);

/// Closed walk in F_k obtained by rotating the tokens once around a cycle of
/// the base graph. `cycle` lists the cycle vertices in order, `positions` the
/// occupied cycle indices (strictly increasing, fewer than the cycle length),
/// `off_cycle` the remaining tokens. Returns the visited token ranks; the
/// walk closes back to the first entry.
std::vector<long> lift_cycle(const TokenSignedGraph& f, std::span<const Vertex> cycle,
                             std::span<const int> positions, std::span<const Vertex> off_cycle);

/// Edge-list text with a "# r = {..}" line per token vertex.
std::string write_token_graph(const TokenSignedGraph& f);

}  // namespace tokensign

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokensign/rational.hpp"
#include "tokensign/signed_graph.hpp"

namespace tokensign {

inline constexpr int kDefaultCanonicalGuard = 64;
inline constexpr long kDefaultLeafCap = 500000;
inline constexpr int kDefaultCycleRankGuard = 20;

/// Forest-normalized form of a signature: switching by `normalizer` makes
/// every forest edge positive, leaving `cotree_signs` on the other edges.
struct CotreeSignature {
  std::vector<Edge> forest;
  std::vector<Edge> cotree;  // sorted, signs as in the normalized graph
  SwitchingVector normalizer;
  std::vector<Sign> cotree_signs() const;
};

CotreeSignature cotree_signature(const SignedGraph& g);

/// s with apply_switching(g1, s) == g2, if any. Throws UnderlyingMismatch.
std::optional<SwitchingVector> switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

struct CanonicalForm {
  std::string key;
  /// labeling[v] is the canonical id of vertex v.
  std::vector<Vertex> labeling;
  /// apply_switching(relabel(g, labeling), switching) == graph.
  SwitchingVector switching;
  SignedGraph graph;
  long leaves = 0;
};

/// Individualization-refinement over the underlying graph (vertex colors
/// seeded by negative-triangle counts), keeping the leaf with the smallest
/// adjacency string and then the smallest co-tree sign string. Equal keys
/// iff switching isomorphic. Throws TooLarge beyond `max_vertices` or when
/// the search tree exceeds `leaf_cap` leaves.
CanonicalForm canonical_form(const SignedGraph& g, int max_vertices = kDefaultCanonicalGuard,
                             long leaf_cap = kDefaultLeafCap);
std::string canonical_signature(const SignedGraph& g);

/// h == apply_switching(relabel(g, permutation), switching).
struct SwitchingIsomorphism {
  std::vector<Vertex> permutation;
  SwitchingVector switching;
};

std::optional<SwitchingIsomorphism> switching_isomorphism(const SignedGraph& g, const SignedGraph& h);
std::optional<SwitchingIsomorphism> switching_isomorphism(const SignedGraph& g, const CanonicalForm& cg,
                                                          const SignedGraph& h, const CanonicalForm& ch);
bool check_switching_isomorphism(const SignedGraph& g, const SignedGraph& h, const SwitchingIsomorphism& cert);

struct ClassReport {
  SignedGraph representative;
  int class_size = 0;  // switching classes merged
  int frustration = 0;
  Rational unbalance;
  std::string label;
  int negation_class = -1;  // index of the class holding the negation
  std::string key;
};

/// All switching-isomorphism classes of signatures on `underlying`, sorted
/// by frustration index and then unbalance level. Throws TooLarge when the
/// cycle rank m - n + c exceeds `max_cycle_rank`.
std::vector<ClassReport> enumerate_switching_iso_classes(const SignedGraph& underlying,
                                                         int max_cycle_rank = kDefaultCycleRankGuard);

struct SignSymmetry {
  bool symmetric = false;
  /// negate(g) == apply_switching(relabel(g, permutation), switching).
  std::optional<SwitchingIsomorphism> certificate;
};

SignSymmetry is_sign_symmetric(const SignedGraph& g);

}  // namespace tokensign

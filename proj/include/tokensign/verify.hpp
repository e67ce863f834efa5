#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tokensign/serialization.hpp"
#include "tokensign/signed_graph.hpp"

namespace tokensign {

struct VerificationReport {
  std::string claim_id;
  std::string instance;
  bool passed = false;
  Json certificate;
};

Json to_json(const VerificationReport& r);

/// Token counts k' on a p-cycle admissible for lifting: max(1, k+p-n) .. min(k, p-1).
std::vector<int> admissible_token_counts(int n, int k, int p);
/// Every cycle once, as a vertex sequence starting at its smallest vertex
/// with the second vertex smaller than the last.
std::vector<std::vector<Vertex>> enumerate_cycles(const SignedGraph& g);
/// Johnson graph Laplacian eigenvalues j(n+1-j), multiplicity C(n,j) - C(n,j-1), ascending.
std::vector<double> johnson_laplacian_spectrum(int n, int k);

VerificationReport verify_edge_counts(const SignedGraph& g, int k);
/// Requires n <= 7 and k <= 3 (TooLarge otherwise).
VerificationReport verify_cycle_lift(const SignedGraph& g, int k);
VerificationReport verify_token_switch(const SignedGraph& g, const SwitchingVector& s, int k);
VerificationReport verify_intertwining(const SignedGraph& g, int k1, int k2);
VerificationReport verify_spectrum_containment(const SignedGraph& g, int k);
VerificationReport verify_complement(const SignedGraph& g, double tol = 1e-9);
VerificationReport verify_token_complement(const SignedGraph& g, int k, double tol = 1e-9);

inline const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"edge-counts",  "cycle-lift", "token-switch",    "intertwine",
                                            "containment", "complement", "token-complement"};
  return ids;
}

struct SweepOptions {
  int trials = 100;
  int n_min = 3;
  int n_max = 7;
  int k_max = 3;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

struct ClaimSummary {
  std::string claim_id;
  int passed = 0;
  int failed = 0;
  std::vector<VerificationReport> failures;
};

/// Runs `options.trials` seeded random instances of each requested claim.
std::vector<ClaimSummary> run_sweep(const std::vector<std::string>& claims, const SweepOptions& options);

}  // namespace tokensign

#include "tokensign/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "tokensign/error.hpp"
#include "tokensign/token.hpp"

namespace tokensign {

Json to_json(const VerificationReport& r) {
  return Json{{"claim", r.claim_id}, {"instance", r.instance}, {"passed", r.passed}, {"certificate", r.certificate}};
}

std::vector<int> admissible_token_counts(int n, int k, int p) {
  std::vector<int> out;
  for (int kp = std::max(1, k + p - n); kp <= std::min(k, p - 1); ++kp) out.push_back(kp);
  return out;
}

std::vector<std::vector<Vertex>> enumerate_cycles(const SignedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::function<void(Vertex, Vertex)> extend = [&](Vertex start, Vertex v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const Vertex w = nb.vertex;
      if (w == start && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      path.push_back(w);
      on_path[static_cast<std::size_t>(w)] = true;
      extend(start, w);
      on_path[static_cast<std::size_t>(w)] = false;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = true;
    extend(s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  return out;
}

std::vector<double> johnson_laplacian_spectrum(int n, int k) {
  std::vector<double> out;
  for (int j = 0; j <= std::min(k, n - k); ++j) {
    const std::int64_t mult = binomial(n, j) - binomial(n, j - 1);
    for (std::int64_t i = 0; i < mult; ++i) out.push_back(static_cast<double>(j) * (n + 1 - j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string describe(const SignedGraph& g, const std::string& extra = "") {
  std::string s = "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) +
                  " m-=" + std::to_string(g.negative_edges());
  return extra.empty() ? s : s + " " + extra;
}

SwitchingVector require_balanced(const SignedGraph& g) {
  const BalanceCertificate c = balance_check(g);
  if (!c.balanced()) throw Error(ErrorCode::NotBalanced, "this claim needs a balanced graph");
  return c.switching();
}

Json edge_json(const Edge& e) { return Json::array({e.u + 1, e.v + 1, to_int(e.sign)}); }

// Eigenvalues largest first, the order used by the complement pairing.
std::vector<double> descending(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

VerificationReport verify_edge_counts(const SignedGraph& g, int k) {
  const TokenSignedGraph f = token_graph(g, k);
  const std::int64_t factor = binomial(g.order() - 2, k - 1);
  VerificationReport r{"edge-counts", describe(g, "k=" + std::to_string(k)), false, {}};
  const std::int64_t want_pos = factor * g.positive_edges();
  const std::int64_t want_neg = factor * g.negative_edges();
  r.passed = f.graph.positive_edges() == want_pos && f.graph.negative_edges() == want_neg;
  r.certificate = Json{{"k", k},
                       {"factor", factor},
                       {"base_positive", g.positive_edges()},
                       {"base_negative", g.negative_edges()},
                       {"token_positive", f.graph.positive_edges()},
                       {"token_negative", f.graph.negative_edges()},
                       {"expected_positive", want_pos},
                       {"expected_negative", want_neg}};
  return r;
}

VerificationReport verify_cycle_lift(const SignedGraph& g, int k) {
  const int n = g.order();
  if (n > 7 || k > 3) throw Error(ErrorCode::TooLarge, "cycle lifting is checked for n <= 7 and k <= 3");
  const TokenSignedGraph f = token_graph(g, k);
  VerificationReport r{"cycle-lift", describe(g, "k=" + std::to_string(k)), true, {}};
  long cycles = 0;
  long lifts = 0;
  Json failure;
  auto fail = [&](const std::vector<Vertex>& cycle, const std::string& why, const std::vector<long>& walk) {
    if (!r.passed) return;
    r.passed = false;
    Json c = Json::array();
    for (Vertex v : cycle) c.push_back(v + 1);
    Json w = Json::array();
    for (long x : walk) w.push_back(subset_label(f.index.unrank(x)));
    failure = Json{{"cycle", c}, {"reason", why}, {"walk", w}};
  };

  for (const auto& cycle : enumerate_cycles(g)) {
    ++cycles;
    const int p = static_cast<int>(cycle.size());
    const Sign sign = *closed_walk_sign(g, cycle);
    std::uint64_t on_cycle = 0;
    for (Vertex v : cycle) on_cycle |= std::uint64_t{1} << v;
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v) {
      if (!(on_cycle >> v & 1)) outside.push_back(v);
    }
    for (int kp : admissible_token_counts(n, k, p)) {
      const SubsetIndex placements(p, kp);
      const SubsetIndex off(static_cast<int>(outside.size()), k - kp);
      for (long pl = 0; pl < placements.size(); ++pl) {
        const std::vector<int> positions = placements.unrank(pl);
        std::set<std::vector<long>> distinct;
        for (long o = 0; o < off.size(); ++o) {
          std::vector<Vertex> rest;
          for (int idx : off.unrank(o)) rest.push_back(outside[static_cast<std::size_t>(idx)]);
          const std::vector<long> walk = lift_cycle(f, cycle, positions, rest);
          ++lifts;
          std::vector<long> sorted = walk;
          std::sort(sorted.begin(), sorted.end());
          if (static_cast<int>(walk.size()) != p || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            fail(cycle, "walk does not visit p distinct token vertices", walk);
            continue;
          }
          Sign product = Sign::positive;
          bool edges_ok = true;
          for (int i = 0; i < p; ++i) {
            const auto s = f.graph.sign(static_cast<Vertex>(walk[static_cast<std::size_t>(i)]),
                                        static_cast<Vertex>(walk[static_cast<std::size_t>((i + 1) % p)]));
            if (!s) {
              edges_ok = false;
              break;
            }
            product = product * *s;
          }
          if (!edges_ok) {
            fail(cycle, "consecutive walk entries are not adjacent", walk);
          } else if (product != sign) {
            fail(cycle, "lifted cycle sign differs", walk);
          }
          distinct.insert(sorted);
        }
        if (static_cast<std::int64_t>(distinct.size()) != binomial(n - p, k - kp)) {
          fail(cycle, "lifted cycles are not pairwise distinct", {});
        }
      }
    }
  }
  r.certificate = Json{{"k", k}, {"cycles", cycles}, {"lifted_cycles", lifts}};
  if (!r.passed) r.certificate["failure"] = failure;
  return r;
}

VerificationReport verify_token_switch(const SignedGraph& g, const SwitchingVector& s, int k) {
  if (s.size() != g.order()) throw Error(ErrorCode::SizeMismatch, "switching vector length differs from n");
  const SignedGraph left = token_graph(apply_switching(g, s), k).graph;
  const SwitchingVector lifted = lift_switching(s, k);
  const SignedGraph right = apply_switching(token_graph(g, k).graph, lifted);
  VerificationReport r{"token-switch", describe(g, "k=" + std::to_string(k)), left == right, {}};
  r.certificate = Json{{"k", k}, {"switching", to_json(s)}, {"lifted_switching", to_json(lifted)}};
  if (!r.passed) {
    Json diff = Json::array();
    for (std::size_t i = 0; i < left.edges().size() && i < right.edges().size(); ++i) {
      if (left.edges()[i] != right.edges()[i]) {
        diff.push_back({edge_json(left.edges()[i]), edge_json(right.edges()[i])});
        break;
      }
    }
    r.certificate["first_difference"] = diff;
  }
  return r;
}

VerificationReport verify_intertwining(const SignedGraph& g, int k1, int k2) {
  require_balanced(g);
  const BinomialMatrix b = signed_binomial_matrix(g, k1, k2);
  const ExactMatrix l1 = laplacian(token_graph(g, k1).graph);
  const ExactMatrix l2 = laplacian(token_graph(g, k2).graph);
  const ExactMatrix lhs = b.entries * l1;
  const ExactMatrix rhs = l2 * b.entries;
  VerificationReport r{"intertwine", describe(g, "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2)), lhs == rhs,
                       {}};
  r.certificate = Json{{"k1", k1}, {"k2", k2}, {"B", to_json(b.entries)}, {"L_k1", to_json(l1)}, {"L_k2", to_json(l2)}};
  return r;
}

VerificationReport verify_spectrum_containment(const SignedGraph& g, int k) {
  require_balanced(g);
  const ExactPolynomial p = char_poly(laplacian(g));
  const ExactPolynomial q = char_poly(laplacian(token_graph(g, k).graph));
  const PolynomialDivision d = poly_divide(p, q);
  VerificationReport r{"containment", describe(g, "k=" + std::to_string(k)), d.divides, {}};
  r.certificate = Json{{"k", k}, {"base_char_poly", to_json(p)}, {"token_char_poly", to_json(q)}};
  if (const auto quotient = d.integer_quotient(); d.divides && quotient) r.certificate["quotient"] = to_json(*quotient);
  return r;
}

VerificationReport verify_complement(const SignedGraph& g, double tol) {
  require_balanced(g);
  const int n = g.order();
  const SignedGraph c = signed_complement(g);
  const ExactMatrix l = laplacian(g);
  const ExactMatrix lc = laplacian(c);
  const bool complement_balanced = is_balanced(c);
  const ExactPolynomial sum_poly = char_poly(l + lc);
  const ExactPolynomial expected =
      ExactPolynomial::from_ints({0, 1}) * ExactPolynomial::linear(BigInt(n)).pow(n - 1);
  const bool commuting = commute(l, lc);
  const std::vector<double> lam = descending(eigenvalues_symmetric(l).eigenvalues);
  const std::vector<double> bar = descending(eigenvalues_symmetric(lc).eigenvalues);
  double worst = 0;
  for (int i = 1; i <= n - 1; ++i) {
    worst = std::max(worst, std::abs(lam[static_cast<std::size_t>(i - 1)] + bar[static_cast<std::size_t>(n - i - 1)] - n));
  }
  VerificationReport r{"complement", describe(g), false, {}};
  r.passed = complement_balanced && sum_poly == expected && commuting && worst <= tol;
  r.certificate = Json{{"complement", to_json(c)},
                       {"complement_balanced", complement_balanced},
                       {"sum_char_poly", to_json(sum_poly)},
                       {"sum_char_poly_expected", sum_poly == expected},
                       {"commute", commuting},
                       {"eigenvalues", lam},
                       {"complement_eigenvalues", bar},
                       {"max_pairing_error", worst},
                       {"tolerance", tol}};
  return r;
}

VerificationReport verify_token_complement(const SignedGraph& g, int k, double tol) {
  require_balanced(g);
  const ExactMatrix l = laplacian(token_graph(g, k).graph);
  const ExactMatrix lc = laplacian(token_graph(signed_complement(g), k).graph);
  const bool commuting = commute(l, lc);
  const std::vector<double> sum = eigenvalues_symmetric(l + lc).eigenvalues;
  const std::vector<double> johnson = johnson_laplacian_spectrum(g.order(), k);
  double worst = 0;
  for (std::size_t i = 0; i < sum.size() && i < johnson.size(); ++i) worst = std::max(worst, std::abs(sum[i] - johnson[i]));
  VerificationReport r{"token-complement", describe(g, "k=" + std::to_string(k)), false, {}};
  r.passed = commuting && sum.size() == johnson.size() && worst <= tol;
  r.certificate = Json{{"k", k},
                       {"commute", commuting},
                       {"sum_eigenvalues", sum},
                       {"johnson_eigenvalues", johnson},
                       {"max_error", worst},
                       {"tolerance", tol}};
  return r;
}

namespace {

SignedGraph random_graph(std::mt19937_64& rng, int n, bool balanced) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> s(static_cast<std::size_t>(n));
  for (auto& x : s) x = coin(rng) ? Sign::negative : Sign::positive;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      const Sign sign = balanced ? s[static_cast<std::size_t>(u)] * s[static_cast<std::size_t>(v)]
                                 : (coin(rng) ? Sign::negative : Sign::positive);
      edges.push_back({u, v, sign});
    }
  }
  return SignedGraph(n, std::move(edges));
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

VerificationReport run_instance(const std::string& claim, std::mt19937_64& rng, const SweepOptions& o) {
  const int n = uniform(rng, std::max(o.n_min, 3), o.n_max);
  const int k = uniform(rng, 1, std::min(o.k_max, n - 1));
  if (claim == "edge-counts") return verify_edge_counts(random_graph(rng, n, false), k);
  if (claim == "cycle-lift") return verify_cycle_lift(random_graph(rng, n, false), k);
  if (claim == "token-switch") {
    const SignedGraph g = random_graph(rng, n, false);
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int& x : s) x = uniform(rng, 0, 1) ? 1 : -1;
    return verify_token_switch(g, SwitchingVector::from_ints(s), k);
  }
  const SignedGraph g = random_graph(rng, n, true);
  if (claim == "intertwine") {
    const int k2 = uniform(rng, 2, std::min(o.k_max, n - 1));
    const int k1 = uniform(rng, 1, k2 - 1);
    return verify_intertwining(g, k1, k2);
  }
  if (claim == "containment") return verify_spectrum_containment(g, k);
  if (claim == "complement") return verify_complement(g, o.tol);
  if (claim == "token-complement") return verify_token_complement(g, k, o.tol);
  throw Error(ErrorCode::MalformedInput, "unknown claim '" + claim + "'");
}

}  // namespace

std::vector<ClaimSummary> run_sweep(const std::vector<std::string>& claims, const SweepOptions& options) {
  if (options.n_max < 3 || options.n_max < options.n_min) throw Error(ErrorCode::NTooSmall, "sweep needs n_max >= 3");
  std::vector<ClaimSummary> out;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    ClaimSummary summary;
    summary.claim_id = claims[c];
    const auto& ids = claim_ids();
    const auto pos = std::find(ids.begin(), ids.end(), claims[c]);
    if (pos == ids.end()) throw Error(ErrorCode::MalformedInput, "unknown claim '" + claims[c] + "'");
    const auto claim_index = static_cast<std::uint64_t>(pos - ids.begin());
    for (int t = 0; t < options.trials; ++t) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(claim_index), static_cast<std::uint32_t>(t)};
      std::mt19937_64 rng(seq);
      VerificationReport r = run_instance(claims[c], rng, options);
      r.instance += " trial=" + std::to_string(t);
      if (r.passed) {
        ++summary.passed;
      } else {
        ++summary.failed;
        summary.failures.push_back(std::move(r));
      }
    }
    out.push_back(std::move(summary));
  }
  return out;
}

}  // namespace tokensign

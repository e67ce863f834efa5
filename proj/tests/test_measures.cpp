#include "doctest.h"
#include "support.hpp"
#include "tokensign/error.hpp"
#include "tokensign/families.hpp"
#include "tokensign/measures.hpp"
#include "tokensign/token.hpp"

using namespace tokensign;

namespace {

Rational q(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

}  // namespace

TEST_CASE("frustration index examples") {
  CHECK(frustration_index(family("all_neg_Kn", 5)).index == 4);
  CHECK(frustration_index(gallery::k5_negative_path()).index == 3);
  const SignedGraph paw = gallery::balanced_paw();
  const FrustrationResult f = frustration_index(paw);
  CHECK(f.index == 0);
  CHECK(apply_switching(paw, f.witness).all_positive());
  CHECK(f.witness == balance_check(paw).switching());
  CHECK_THROWS_AS(frustration_index(complete_graph(25)), Error);
  CHECK(frustration_index(complete_graph(25), 25).index == 0);
}

TEST_CASE("frustration index matches exhaustive switching") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 10;
    const SignedGraph g = testing::random_graph(rng, n, 0.5);
    const FrustrationResult f = frustration_index(g);
    CHECK(f.index == testing::naive_frustration(g));
    CHECK(apply_switching(g, f.witness).negative_edges() == f.index);
    CHECK(static_cast<int>(f.removed_edges.size()) == f.index);
    CHECK((f.index == 0) == is_balanced(g));
  }
}

TEST_CASE("unbalance level examples") {
  CHECK(unbalance_level_m(family("Cn_minus", 3), 3) == q(2, 5));
  CHECK(unbalance_level_m(family("all_neg_Cn", 5), 5) == q(2, 11));
  CHECK(unbalance_level(gallery::k5_negative_path()).ell == q(124, 149));
  CHECK(unbalance_level(family("all_neg_Kn", 5)).ell == q(72, 91));
  CHECK(unbalance_level(token_graph(family("Cn_minus", 5), 2).graph).ell == q(59, 96));
  CHECK(unbalance_level(family("Kn_minus", 5)).ell == q(132, 323));
  CHECK(unbalance_level(gallery::paw_one_negative()).ell == q(1, 3));
  CHECK(unbalance_level(token_graph(gallery::paw_one_negative(), 2).graph).ell == q(22, 39));
  for (int m = 0; m <= 6; ++m) CHECK(unbalance_level_m(complete_graph(5), m).is_zero());
}

TEST_CASE("unbalance level matches the definition via dense traces") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 8;
    const SignedGraph g = testing::random_graph(rng, n, 0.5);
    const UnbalanceResult u = unbalance_level(g);
    CHECK(u.ell == testing::naive_unbalance(g));
    CHECK(u.ell == std::max(u.ell_n_minus_1, u.ell_n));
    CHECK(u.ell >= Rational());
    CHECK(u.ell <= Rational(1));
    CHECK(u.ell.is_zero() == balance_check(g).balanced());
  }
}

TEST_CASE("unbalance level and frustration are switching-isomorphism invariants") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 6;
    const SignedGraph g = testing::random_graph(rng, n, 0.6);
    const SignedGraph h = relabel(apply_switching(g, testing::random_switching(rng, n)), testing::random_permutation(rng, n));
    CHECK(unbalance_level(h).ell == unbalance_level(g).ell);
    CHECK(frustration_index(h).index == frustration_index(g).index);
  }
}

TEST_CASE("cycles: even all-negative cycles are balanced, odd cycles agree") {
  for (int n = 3; n <= 15; ++n) {
    const Rational one = unbalance_level(family("Cn_minus", n)).ell;
    const Rational all = unbalance_level(family("all_neg_Cn", n)).ell;
    if (n % 2 == 0) {
      CHECK(all.is_zero());
    } else {
      CHECK(one == all);
    }
    CHECK(one > Rational());
  }
}

TEST_CASE("frustration bounds examples") {
  const FrustrationBounds c4 = check_frustration_bounds(family("Cn_minus", 4), 2);
  CHECK(c4.base == 1);
  CHECK(c4.upper == 2);
  CHECK(c4.token >= 1);
  CHECK(c4.token <= 2);
  CHECK(c4.holds());

  const FrustrationBounds bal = check_frustration_bounds(gallery::balanced_paw(), 2);
  CHECK(bal.base == 0);
  CHECK(bal.token == 0);
  CHECK(bal.upper == 0);

  const FrustrationBounds paw = check_frustration_bounds(gallery::paw_one_negative(), 2);
  CHECK(paw.base == 1);
  CHECK(paw.token >= 1);
  CHECK(paw.token <= 2);

  const FrustrationBounds k5 = check_frustration_bounds(family("all_neg_Kn", 5), 2);
  CHECK(k5.base == 4);
  CHECK(k5.token == 10);
  CHECK(k5.upper == 12);
  CHECK_THROWS_AS(check_frustration_bounds(complete_graph(8), 3), Error);
}

TEST_CASE("frustration bounds hold on random instances") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 4;
    const SignedGraph g = testing::random_graph(rng, n, 0.6);
    const FrustrationBounds b = check_frustration_bounds(g, 2);
    CHECK(b.holds());
    CHECK(b.token == testing::naive_frustration(token_graph(g, 2).graph));
  }
}

TEST_CASE("explorer") {
  ExplorerOptions none;
  none.trials = 0;
  const ExplorerReport empty = explore_monotonicity(none);
  CHECK(empty.trials_run == 0);
  CHECK(empty.counterexamples.empty());

  ExplorerOptions bal;
  bal.trials = 60;
  bal.balanced_only = true;
  bal.seed = 3;
  const ExplorerReport r = explore_monotonicity(bal);
  CHECK(r.trials_run == 60);
  CHECK(r.statement1_violations == 0);
  CHECK(r.statement2_violations == 0);
  CHECK(r.statement3_violations == 0);

  ExplorerOptions o;
  o.trials = 40;
  o.seed = 9;
  const ExplorerReport a = explore_monotonicity(o);
  const ExplorerReport b = explore_monotonicity(o);
  CHECK(a.statement3_violations == b.statement3_violations);
  CHECK(a.max_ell == b.max_ell);
}

TEST_CASE("evaluate pair orders by frustration and checks statement 1") {
  const SignedGraph c5 = family("Cn_minus", 5);
  const ExplorerSample s = evaluate_pair(negate(cycle_graph(5)), cycle_graph(5), 2);
  CHECK(s.first_frustration.index <= s.second_frustration.index);
  CHECK(s.statement1);
  CHECK_THROWS_AS(evaluate_pair(c5, complete_graph(5), 2), Error);
}

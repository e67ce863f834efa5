#include "doctest.h"
#include "support.hpp"
#include "tokensign/error.hpp"
#include "tokensign/families.hpp"
#include "tokensign/token.hpp"

using namespace tokensign;

namespace {

const char* kPaw = "4 4\n1 2 +\n2 3 -\n2 4 -\n3 4 +\n";

std::vector<int> ints(const SwitchingVector& s) {
  std::vector<int> out;
  for (Sign x : s.values()) out.push_back(to_int(x));
  return out;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
}

TEST_CASE("subset index is lexicographic and invertible") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const SubsetIndex idx(n, k);
      const auto expected = testing::naive_subsets(n, k);
      REQUIRE(idx.size() == static_cast<long>(expected.size()));
      for (long r = 0; r < idx.size(); ++r) {
        CHECK(idx.unrank(r) == expected[static_cast<std::size_t>(r)]);
        CHECK(idx.rank(idx.mask(r)) == r);
        CHECK(idx.rank(expected[static_cast<std::size_t>(r)]) == r);
      }
    }
  }
  const std::vector<Vertex> s{0, 2};
  CHECK(subset_label(s) == "{1,3}");
}

TEST_CASE("token graph of the signed K5 is a 10-vertex 30-edge Johnson graph") {
  const SignedGraph k5 = gallery::k5_negative_path();
  const TokenSignedGraph f = token_graph(k5, 2);
  CHECK(f.graph.order() == 10);
  CHECK(f.graph.size() == 30);
  for (Vertex v = 0; v < 10; ++v) CHECK(f.graph.degree(v) == 6);
  CHECK(f.graph.positive_edges() == 3 * k5.positive_edges());
  CHECK(f.graph.negative_edges() == 3 * k5.negative_edges());
}

TEST_CASE("token graph matches the pairwise oracle") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 80; ++t) {
    const int n = 2 + t % 7;
    const SignedGraph g = testing::random_graph(rng, n);
    for (int k = 1; k < n; ++k) {
      const TokenSignedGraph f = token_graph(g, k);
      CHECK(f.graph == testing::naive_token_graph(g, k));
      const std::int64_t c = binomial(n - 2, k - 1);
      CHECK(f.graph.positive_edges() == c * g.positive_edges());
      CHECK(f.graph.negative_edges() == c * g.negative_edges());
    }
    CHECK(token_graph(g, 1).graph == g);
  }
}

TEST_CASE("token graph errors") {
  const SignedGraph c5 = family("Cn_minus", 5);
  CHECK_THROWS_AS(token_graph(c5, 0), Error);
  CHECK_THROWS_AS(token_graph(c5, 5), Error);
  try {
    token_graph(complete_graph(30), 10);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCapExceeded);
  }
  CHECK(token_graph(c5, 2, 10).graph.order() == 10);
  CHECK_THROWS_AS(token_graph(c5, 2, 9), Error);
}

TEST_CASE("lift switching examples") {
  const std::vector<Vertex> u13{0, 2};
  CHECK(ints(lift_switching(SwitchingVector::from_set(4, u13), 2)) == std::vector<int>{-1, 1, -1, -1, 1, -1});
  // With U the whole vertex set every k-subset meets U in k vertices.
  CHECK(lift_switching(SwitchingVector(5), 2) == SwitchingVector(10));
  CHECK(lift_switching(SwitchingVector(5), 3) == -SwitchingVector(10));
  const std::vector<Vertex> u1{0};
  CHECK(ints(lift_switching(SwitchingVector::from_set(3, u1), 2)) == std::vector<int>{-1, -1, 1});
}

TEST_CASE("token graphs commute with switching and negation, and keep balance") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 6;
    const SignedGraph g = testing::random_graph(rng, n);
    const SwitchingVector s = testing::random_switching(rng, n);
    for (int k = 1; k < n; ++k) {
      const SignedGraph f = token_graph(g, k).graph;
      CHECK(token_graph(apply_switching(g, s), k).graph == apply_switching(f, lift_switching(s, k)));
      CHECK(token_graph(apply_switching(g, s), k).graph == apply_switching(f, product_switching(s, k)));
      CHECK(token_graph(negate(g), k).graph == negate(f));
    }
    const SignedGraph b = testing::random_balanced(rng, n);
    for (int k = 1; k < n; ++k) CHECK(is_balanced(token_graph(b, k).graph));
  }
}

TEST_CASE("binomial matrices") {
  const BinomialMatrix b = binomial_matrix(4, 1, 2);
  CHECK(b.entries.rows() == 6);
  CHECK(b.entries.cols() == 4);
  for (int r = 0; r < 6; ++r) {
    long ones = 0;
    for (int c = 0; c < 4; ++c) ones += b.entries(r, c).get_si();
    CHECK(ones == 2);
  }
  CHECK(testing::rational_rank(b.entries) == 4);

  const BinomialMatrix b523 = binomial_matrix(5, 2, 3);
  CHECK(b523.entries.rows() == 10);
  CHECK(b523.entries.cols() == 10);
  for (int r = 0; r < 10; ++r) {
    long ones = 0;
    for (int c = 0; c < 10; ++c) ones += b523.entries(r, c).get_si();
    CHECK(ones == 3);
  }
  CHECK_THROWS_AS(binomial_matrix(4, 2, 2), Error);
}

TEST_CASE("signed binomial matrix of the balanced paw") {
  const SignedGraph paw = parse_graph(kPaw);
  const BinomialMatrix b = signed_binomial_matrix(paw, 1, 2);
  CHECK(b.entries == ExactMatrix::from_rows({{1, 1, 0, 0},
                                             {-1, 0, 1, 0},
                                             {-1, 0, 0, 1},
                                             {0, -1, 1, 0},
                                             {0, -1, 0, 1},
                                             {0, 0, -1, -1}}));
  CHECK(b.entries * laplacian(paw) == laplacian(token_graph(paw, 2).graph) * b.entries);
  CHECK(signed_binomial_matrix(complete_graph(5), 2, 3).entries == binomial_matrix(5, 2, 3).entries);
  CHECK_THROWS_AS(signed_binomial_matrix(family("Cn_minus", 4), 1, 2), Error);
}

TEST_CASE("signed binomial matrices intertwine token laplacians") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + t % 5;
    const SignedGraph g = testing::random_balanced(rng, n, 0.6);
    for (int k1 = 1; k1 < n; ++k1) {
      for (int k2 = k1 + 1; k2 < n; ++k2) {
        const ExactMatrix b = signed_binomial_matrix(g, k1, k2).entries;
        const ExactMatrix l1 = laplacian(token_graph(g, k1).graph);
        const ExactMatrix l2 = laplacian(token_graph(g, k2).graph);
        CHECK((b * l1 - l2 * b).is_zero());
        if (k1 + k2 <= n) CHECK(testing::rational_rank(b) == binomial(n, k1));
      }
    }
  }
}

TEST_CASE("lifting a negative 5-cycle with two tokens") {
  const SignedGraph c5 = family("Cn_minus", 5);
  const TokenSignedGraph f = token_graph(c5, 2);
  const std::vector<Vertex> cycle{0, 1, 2, 3, 4};
  const std::vector<int> positions{0, 2};
  const auto walk = lift_cycle(f, cycle, positions, {});
  CHECK(walk.size() == 5);
  std::vector<long> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  std::vector<Vertex> closed(walk.begin(), walk.end());
  CHECK(closed_walk_sign(f.graph, closed) == Sign::negative);
}

TEST_CASE("token graph text lists subsets") {
  const TokenSignedGraph f = token_graph(parse_graph(kPaw), 2);
  const std::string text = write_token_graph(f);
  CHECK(text.find("# 1 = {1,2}") != std::string::npos);
  CHECK(text.find("# 6 = {3,4}") != std::string::npos);
  CHECK(parse_graph(text) == f.graph);
}

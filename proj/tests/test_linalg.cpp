#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "tokensign/eigen.hpp"
#include "tokensign/error.hpp"
#include "tokensign/families.hpp"
#include "tokensign/polynomial.hpp"
#include "tokensign/token.hpp"

using namespace tokensign;

namespace {

const char* kPaw = "4 4\n1 2 +\n2 3 -\n2 4 -\n3 4 +\n";

ExactPolynomial poly(std::vector<long> c) { return ExactPolynomial::from_ints(c); }

double frobenius(const std::vector<double>& m) {
  double s = 0;
  for (double x : m) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
  const Rational a(BigInt(6), BigInt(-4));
  CHECK(a.str() == "-3/2");
  CHECK((a + Rational(2)).str() == "1/2");
  CHECK((a * a).str() == "9/4");
  CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
  CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("-7").is_integer());
  CHECK(Rational(BigInt(2), BigInt(3)) < Rational(BigInt(3), BigInt(4)));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
  CHECK(approx4(Rational(BigInt(2), BigInt(4709))) == "0.0004247");
  CHECK(approx4(Rational(BigInt(132), BigInt(323))) == "0.4087");
}

TEST_CASE("adjacency and laplacian examples") {
  const SignedGraph c3 = family("Cn_minus", 3);
  const ExactMatrix a = adjacency(c3);
  CHECK(a == ExactMatrix::from_rows({{0, -1, 1}, {-1, 0, 1}, {1, 1, 0}}));
  CHECK(adjacency(SignedGraph(3)).is_zero());

  const SignedGraph paw = parse_graph(kPaw);
  const ExactMatrix l1 = ExactMatrix::from_rows({{1, -1, 0, 0}, {-1, 3, 1, 1}, {0, 1, 2, -1}, {0, 1, -1, 2}});
  CHECK(laplacian(paw) == l1);
  const ExactMatrix l2 = ExactMatrix::from_rows({{2, 1, 1, 0, 0, 0},
                                                 {1, 3, -1, -1, 0, 0},
                                                 {1, -1, 3, 0, -1, 0},
                                                 {0, -1, 0, 3, -1, 1},
                                                 {0, 0, -1, -1, 3, 1},
                                                 {0, 0, 0, 1, 1, 2}});
  CHECK(laplacian(token_graph(paw, 2).graph) == l2);
  CHECK(laplacian(complete_graph(3)) == ExactMatrix::from_rows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

TEST_CASE("power traces") {
  const auto t = power_traces(adjacency(family("Cn_minus", 3)), 3);
  CHECK(t == std::vector<BigInt>{3, 0, 6, -6});
  for (int n = 2; n <= 7; ++n) {
    const auto tk = power_traces(adjacency(complete_graph(n)), 8);
    for (int r = 0; r <= 8; ++r) {
      mpz_class expected;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), mpz_class(n - 1).get_mpz_t(), static_cast<unsigned long>(r));
      expected = p + (n - 1) * (r % 2 == 0 ? 1 : -1);
      CHECK(tk[r] == expected);
    }
  }
  const auto z = power_traces(ExactMatrix(4, 4), 5);
  CHECK(z == std::vector<BigInt>{4, 0, 0, 0, 0, 0});
}

TEST_CASE("power traces match dense products, tr A = 0, tr A^2 = 2m") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const SignedGraph g = testing::random_graph(rng, 2 + t % 8);
    const auto lib = power_traces(adjacency(g), g.order());
    const auto ref = testing::naive_traces(testing::dense_adjacency(g), g.order());
    for (std::size_t r = 0; r < ref.size(); ++r) CHECK(lib[r] == BigInt(static_cast<long>(ref[r])));
    CHECK(lib[1] == 0);
    CHECK(lib[2] == 2 * g.size());
  }
}

TEST_CASE("char poly examples") {
  const SignedGraph paw = parse_graph(kPaw);
  const ExactPolynomial l1 = char_poly(laplacian(paw));
  CHECK(l1 == ExactPolynomial::linear(0) * ExactPolynomial::linear(1) * ExactPolynomial::linear(3) *
                  ExactPolynomial::linear(4));
  CHECK(char_poly(adjacency(family("Kn_minus", 4))) == poly({-1, 0, 1}) * poly({-5, 0, 1}));
  CHECK(char_poly(ExactMatrix::identity(3)) == ExactPolynomial::linear(1).pow(3));
  CHECK(char_poly(adjacency(family("Kn_minus", 4))).str() == "x^4 - 6x^2 + 5");
}

TEST_CASE("char poly agrees with a determinant oracle and is switching invariant") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 7;
    const SignedGraph g = testing::random_graph(rng, n);
    for (const ExactMatrix& m : {adjacency(g), laplacian(g)}) {
      const ExactPolynomial p = char_poly(m);
      CHECK(p.degree() == n);
      CHECK(p.leading() == 1);
      for (long x = -3; x <= 3; ++x) CHECK(Rational(p.evaluate(x)) == testing::det_shifted(m, x));
    }
    const SwitchingVector s = testing::random_switching(rng, n);
    CHECK(char_poly(adjacency(apply_switching(g, s))) == char_poly(adjacency(g)));
  }
}

TEST_CASE("polynomial division") {
  const auto d = poly_divide(poly({-1, 0, 1}), poly({-1, 0, 0, 0, 1}));
  CHECK(d.divides);
  REQUIRE(d.integer_quotient());
  CHECK(*d.integer_quotient() == poly({1, 0, 1}));
  CHECK_FALSE(poly_divides(poly({-2, 1}), poly({1, 0, 1})));
  CHECK_THROWS_AS(poly_divide(ExactPolynomial(), poly({1})), Error);
  const SignedGraph paw = parse_graph(kPaw);
  CHECK(poly_divides(char_poly(laplacian(paw)), char_poly(laplacian(token_graph(paw, 2).graph))));
}

TEST_CASE("eigenvalue examples") {
  auto close = [](std::vector<double> got, std::vector<double> want) {
    std::sort(want.begin(), want.end());
    return spectra_match(got, want, 1e-9);
  };
  const double r5 = std::sqrt(5.0);
  const double r8 = std::sqrt(8.0);
  CHECK(close(eigenvalues_symmetric(adjacency(family("Kn_minus", 4))).eigenvalues, {-r5, -1, 1, r5}));
  CHECK(close(eigenvalues_symmetric(adjacency(token_graph(family("Kn_minus", 4), 2).graph)).eigenvalues,
              {-r8, -2, 0, 0, 2, r8}));
  const double r12 = std::sqrt(12.0);
  CHECK(close(eigenvalues_symmetric(adjacency(family("Kn_minus", 6))).eigenvalues,
              {1 - r12, -1, -1, -1, 1, 1 + r12}));
  const long diag[] = {3, 1, 2};
  CHECK(close(eigenvalues_symmetric(ExactMatrix::diagonal(diag)).eigenvalues, {1, 2, 3}));
  CHECK_THROWS_AS(eigenvalues_symmetric(ExactMatrix::from_rows({{0, 1}, {2, 0}})), Error);
}

TEST_CASE("jacobi reconstructs random symmetric matrices up to order 45") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int order : {1, 2, 3, 7, 16, 30, 45}) {
    std::vector<double> m(static_cast<std::size_t>(order * order));
    for (int i = 0; i < order; ++i)
      for (int j = i; j < order; ++j) m[i * order + j] = m[j * order + i] = u(rng);
    const EigenDecomposition d = jacobi_eigen(m, order);
    std::vector<double> diff(m.size());
    double trace = 0;
    double sum = 0;
    for (int i = 0; i < order; ++i) {
      trace += m[i * order + i];
      sum += d.values[i];
      for (int j = 0; j < order; ++j) {
        double r = 0;
        for (int t = 0; t < order; ++t) r += d.vectors[i * order + t] * d.values[t] * d.vectors[j * order + t];
        diff[i * order + j] = r - m[i * order + j];
      }
    }
    CHECK(frobenius(diff) <= 1e-8 * frobenius(m));
    CHECK(std::abs(trace - sum) <= 1e-9 * std::max(1.0, std::abs(trace)));
    CHECK(std::is_sorted(d.values.begin(), d.values.end()));
  }
}

TEST_CASE("eigenvalue power sums reproduce exact traces") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 8;
    const SignedGraph g = testing::random_graph(rng, n, 0.6);
    const ExactMatrix a = adjacency(g);
    const auto traces = power_traces(a, n);
    const auto ev = eigenvalues_symmetric(a).eigenvalues;
    for (int r = 1; r <= n; ++r) {
      double s = 0;
      for (double x : ev) s += std::pow(x, r);
      const double exact = traces[r].get_d();
      CHECK(std::abs(s - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("commute") {
  const ExactMatrix a = ExactMatrix::from_rows({{1, 2, 0}, {0, 1, 0}, {3, 0, 1}});
  const ExactMatrix b = ExactMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}});
  CHECK_FALSE(commute(a, b));
  CHECK(commute(a, ExactMatrix::identity(3)));
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    const SignedGraph g = testing::random_balanced(rng, 2 + t % 6);
    CHECK(commute(laplacian(g), laplacian(signed_complement(g))));
  }
}

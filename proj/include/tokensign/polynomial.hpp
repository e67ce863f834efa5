#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokensign/matrix.hpp"
#include "tokensign/rational.hpp"

namespace tokensign {

/// Integer-coefficient polynomial, lowest degree first, no trailing zeros.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<BigInt> coefficients);
  static ExactPolynomial from_ints(const std::vector<long>& coefficients);
  /// x - root.
  static ExactPolynomial linear(const BigInt& root);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(int i) const;
  BigInt leading() const;
  BigInt evaluate(const BigInt& x) const;
  ExactPolynomial pow(int e) const;
  /// e.g. "x^4 - 6x^2 + 5".
  std::string str() const;

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// det(xI - M) by the Faddeev-LeVerrier recurrence.
ExactPolynomial char_poly(const ExactMatrix& m);

struct PolynomialDivision {
  bool divides = false;
  std::vector<Rational> quotient;   // lowest degree first
  std::vector<Rational> remainder;  // empty when zero
  /// Quotient as an integer polynomial when all its coefficients are integral.
  std::optional<ExactPolynomial> integer_quotient() const;
};

/// Long division of `dividend` by `divisor` over the rationals.
PolynomialDivision poly_divide(const ExactPolynomial& divisor, const ExactPolynomial& dividend);
bool poly_divides(const ExactPolynomial& divisor, const ExactPolynomial& dividend);

}  // namespace tokensign

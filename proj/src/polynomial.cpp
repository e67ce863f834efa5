#include "tokensign/polynomial.hpp"

#include "tokensign/error.hpp"

namespace tokensign {

ExactPolynomial::ExactPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ExactPolynomial ExactPolynomial::from_ints(const std::vector<long>& coefficients) {
  std::vector<BigInt> c;
  c.reserve(coefficients.size());
  for (long x : coefficients) c.emplace_back(x);
  return ExactPolynomial(std::move(c));
}

ExactPolynomial ExactPolynomial::linear(const BigInt& root) { return ExactPolynomial({BigInt(-root), BigInt(1)}); }

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt ExactPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt ExactPolynomial::leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

BigInt ExactPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPolynomial ExactPolynomial::pow(int e) const {
  ExactPolynomial out = from_ints({1});
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string ExactPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ExactPolynomial(std::move(c));
}

ExactPolynomial char_poly(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  ExactMatrix mk(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    for (int i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (m(i, j) != 0) mpz_addmul(tr.get_mpz_t(), m(i, j).get_mpz_t(), mk(j, i).get_mpz_t());
      }
    }
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[static_cast<std::size_t>(n - k)] = -q;
  }
  return ExactPolynomial(std::move(c));
}

std::optional<ExactPolynomial> PolynomialDivision::integer_quotient() const {
  std::vector<BigInt> c;
  c.reserve(quotient.size());
  for (const Rational& r : quotient) {
    if (!r.is_integer()) return std::nullopt;
    c.push_back(r.num());
  }
  return ExactPolynomial(std::move(c));
}

PolynomialDivision poly_divide(const ExactPolynomial& divisor, const ExactPolynomial& dividend) {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
  PolynomialDivision out;
  std::vector<Rational> rem;
  for (const BigInt& x : dividend.coefficients()) rem.emplace_back(x);
  const int dd = divisor.degree();
  const Rational lead(divisor.leading());
  if (dividend.degree() >= dd) {
    out.quotient.assign(static_cast<std::size_t>(dividend.degree() - dd + 1), Rational());
    for (int i = dividend.degree(); i >= dd; --i) {
      const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
      out.quotient[static_cast<std::size_t>(i - dd)] = factor;
      if (factor.is_zero()) continue;
      for (int j = 0; j <= dd; ++j) {
        rem[static_cast<std::size_t>(i - dd + j)] -= factor * Rational(divisor.coefficient(j));
      }
    }
  }
  while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  out.remainder = std::move(rem);
  out.divides = out.remainder.empty();
  return out;
}

bool poly_divides(const ExactPolynomial& divisor, const ExactPolynomial& dividend) {
  return poly_divide(divisor, dividend).divides;
}

}  // namespace tokensign

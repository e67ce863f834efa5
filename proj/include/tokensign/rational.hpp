#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace tokensign {

using BigInt = mpz_class;

std::string to_string(const BigInt& x);

/// Reduced fraction over arbitrary-precision integers: den > 0 and
/// gcd(|num|, den) = 1 after every operation.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// "p/q" or "p".
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const;
  std::string str() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Decimal with four significant digits ("0.4", "0.2222", "0.0004247").
std::string approx4(const Rational& r);

}  // namespace tokensign

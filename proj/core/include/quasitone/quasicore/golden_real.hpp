#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "quasitone/numbertheory/fraction.hpp"

namespace quasitone::quasi {

using nt::BigInt;
using nt::Fraction;

/// Exact element a + b·φ of the quadratic field Q(φ), φ = (1 + √5)/2.
///
/// Arithmetic reduces with φ² = φ + 1. Sign and ordering are decided
/// exactly from the integer test on 2a + b + b√5, never through floating
/// point, so equality of two onsets or periods is structural.
class GoldenReal {
 public:
  GoldenReal() = default;
  GoldenReal(Fraction rational) : rational_(std::move(rational)) {}  // NOLINT
  GoldenReal(std::int64_t rational) : rational_(rational) {}         // NOLINT
  GoldenReal(Fraction rational, Fraction golden)
      : rational_(std::move(rational)), golden_(std::move(golden)) {}

  static GoldenReal phi() { return GoldenReal(Fraction(0), Fraction(1)); }

  const Fraction& rational_part() const noexcept { return rational_; }
  const Fraction& golden_part() const noexcept { return golden_; }

  bool is_rational() const noexcept { return golden_.is_zero(); }
  bool is_zero() const noexcept { return rational_.is_zero() && golden_.is_zero(); }

  int sign() const;
  BigInt floor() const;
  GoldenReal abs() const { return sign() < 0 ? -*this : *this; }
  /// Algebraic conjugate a + b·(1 − φ).
  GoldenReal conjugate() const;
  /// Field norm a² + ab − b² (rational).
  Fraction norm() const;
  GoldenReal reciprocal() const;

  double to_double() const;
  std::string to_decimal(unsigned places) const;
  /// Exact form: "a/b" when rational, otherwise "a/b+c/d*phi".
  std::string to_string() const;

  GoldenReal operator-() const { return GoldenReal(-rational_, -golden_); }
  GoldenReal& operator+=(const GoldenReal& rhs);
  GoldenReal& operator-=(const GoldenReal& rhs);
  GoldenReal& operator*=(const GoldenReal& rhs);
  GoldenReal& operator/=(const GoldenReal& rhs);

  friend GoldenReal operator+(GoldenReal a, const GoldenReal& b) { return a += b; }
  friend GoldenReal operator-(GoldenReal a, const GoldenReal& b) { return a -= b; }
  friend GoldenReal operator*(GoldenReal a, const GoldenReal& b) { return a *= b; }
  friend GoldenReal operator/(GoldenReal a, const GoldenReal& b) { return a /= b; }

  friend bool operator==(const GoldenReal& a, const GoldenReal& b) {
    return a.rational_ == b.rational_ && a.golden_ == b.golden_;
  }
  friend std::strong_ordering operator<=>(const GoldenReal& a, const GoldenReal& b) {
    return (a - b).sign() <=> 0;
  }
  friend std::ostream& operator<<(std::ostream& os, const GoldenReal& x) {
    return os << x.to_string();
  }

 private:
  Fraction rational_;
  Fraction golden_;
};

/// Sign of p + q·φ for integers p, q.
int golden_sign(const BigInt& p, const BigInt& q);

}  // namespace quasitone::quasi

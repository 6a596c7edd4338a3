#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "quasitone/numbertheory/bigint.hpp"

namespace quasitone::nt {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Fraction(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
  Fraction(BigInt n, BigInt d);

  /// Parses "a", "a/b", or a finite decimal such as "-0.25" exactly.
  static Fraction parse(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return -floor_div(-num_, den_); }
  Fraction abs() const { return num_.sign() < 0 ? -*this : *this; }
  Fraction reciprocal() const;

  double to_double() const;
  /// Decimal rendering rounded half away from zero to `places` digits.
  std::string to_decimal(unsigned places) const;
  /// "a/b" with an explicit denominator, even when it is 1.
  std::string to_string() const;

  Fraction operator-() const;
  Fraction& operator+=(const Fraction& rhs);
  Fraction& operator-=(const Fraction& rhs);
  Fraction& operator*=(const Fraction& rhs);
  Fraction& operator/=(const Fraction& rhs);

  friend Fraction operator+(Fraction lhs, const Fraction& rhs) { return lhs += rhs; }
  friend Fraction operator-(Fraction lhs, const Fraction& rhs) { return lhs -= rhs; }
  friend Fraction operator*(Fraction lhs, const Fraction& rhs) { return lhs *= rhs; }
  friend Fraction operator/(Fraction lhs, const Fraction& rhs) { return lhs /= rhs; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.to_string();
  }

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Rounds x·10^places half away from zero and formats it as a decimal.
std::string format_scaled_decimal(const BigInt& scaled, unsigned places);

}  // namespace quasitone::nt

template <>
struct std::hash<quasitone::nt::Fraction> {
  std::size_t operator()(const quasitone::nt::Fraction& f) const noexcept {
    return boost::multiprecision::hash_value(f.numerator()) * 31u ^
           boost::multiprecision::hash_value(f.denominator());
  }
};

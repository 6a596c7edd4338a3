#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "quasitone/numbertheory/fraction.hpp"
#include "quasitone/quasicore/golden_real.hpp"

namespace quasitone::nt {

using quasi::GoldenReal;

/// Closed rational enclosure [lower, upper] of a real that is only known to
/// finite precision, such as a truncated decimal expansion of π.
struct RationalInterval {
  Fraction lower;
  Fraction upper;
};

/// A real number with an exact-evaluation contract.
///
/// Values are held exactly (rational, or in Q(φ)) or as a rational
/// enclosure. Every query either returns a certified answer or throws
/// PrecisionExhausted; nothing is decided from a rounded approximation.
class Real {
 public:
  Real() : value_(Fraction(0)) {}
  Real(Fraction x) : value_(std::move(x)) {}  // NOLINT
  Real(std::int64_t x) : value_(Fraction(x)) {}  // NOLINT
  Real(GoldenReal x);                          // NOLINT
  Real(RationalInterval x);                    // NOLINT

  /// π enclosed to `digits` decimal places (at most 100).
  static Real pi(unsigned digits = 50);
  static Real phi() { return Real(GoldenReal::phi()); }
  /// A decimal string read as truncated: the true value lies within one unit
  /// of its last digit, away from zero.
  static Real from_truncated_decimal(std::string_view text);

  bool is_exact() const noexcept { return !std::holds_alternative<RationalInterval>(value_); }
  bool is_rational() const noexcept { return std::holds_alternative<Fraction>(value_); }

  const Fraction* as_fraction() const noexcept { return std::get_if<Fraction>(&value_); }
  const RationalInterval* as_interval() const noexcept {
    return std::get_if<RationalInterval>(&value_);
  }
  /// The exact value in Q(φ); throws InexactValue for an enclosure.
  GoldenReal to_golden() const;

  /// Sign of c0 + c1·x.
  int sign_affine(const Fraction& c0, const Fraction& c1) const;
  int sign() const { return sign_affine(Fraction(0), Fraction(1)); }
  BigInt floor() const;
  Real abs() const;
  Real reciprocal() const;

  double to_double() const;
  std::string to_decimal(unsigned places) const;
  /// Exact form when exact ("a/b", "a/b+c/d*phi"), otherwise a decimal.
  std::string to_string() const;

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  /// Three-way comparison; throws PrecisionExhausted if undecidable.
  friend int compare(const Real& a, const Real& b) { return (a - b).sign(); }

 private:
  std::variant<Fraction, GoldenReal, RationalInterval> value_;
};

/// Parses a sum of terms, each an integer, a/b, a decimal, `phi`, `pi`, or a
/// coefficient times `phi`/`pi` (e.g. "2*pi", "1+3/2*phi", "-phi").
Real parse_real(std::string_view text);

}  // namespace quasitone::nt

#include "quasitone/quasicore/golden_real.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>

#include "quasitone/errors.hpp"

namespace quasitone::quasi {

namespace {

// Writes x = (p + q·φ) / d with integers p, q and d > 0.
void common_form(const GoldenReal& x, BigInt& p, BigInt& q, BigInt& d) {
  const Fraction& a = x.rational_part();
  const Fraction& b = x.golden_part();
  d = boost::multiprecision::lcm(a.denominator(), b.denominator());
  p = a.numerator() * (d / a.denominator());
  q = b.numerator() * (d / b.denominator());
}

}  // namespace

int golden_sign(const BigInt& p, const BigInt& q) {
  // p + qφ = (u + q√5) / 2 with u = 2p + q.
  BigInt u = 2 * p + q;
  int su = u.sign();
  int sq = q.sign();
  if (su >= 0 && sq >= 0) {
    return (su > 0 || sq > 0) ? 1 : 0;
  }
  if (su <= 0 && sq <= 0) {
    return -1;
  }
  // Opposite signs; √5 is irrational so u² ≠ 5q² whenever q ≠ 0.
  int cmp = BigInt(u * u).compare(BigInt(5 * q * q));
  return su > 0 ? (cmp > 0 ? 1 : -1) : (cmp > 0 ? -1 : 1);
}

int GoldenReal::sign() const {
  if (golden_.is_zero()) {
    return rational_.sign();
  }
  if (rational_.is_zero()) {
    return golden_.sign();
  }
  BigInt p, q, d;
  common_form(*this, p, q, d);
  return golden_sign(p, q);
}

BigInt GoldenReal::floor() const {
  if (golden_.is_zero()) {
    return rational_.floor();
  }
  // x = (2p + q + q√5) / (2d). With m = floor(q√5), the numerator lies
  // strictly inside (K, K + 1) for K = 2p + q + m, so floor(x) = floor(K/2d).
  BigInt p, q, d;
  common_form(*this, p, q, d);
  BigInt root = boost::multiprecision::sqrt(BigInt(5 * q * q));
  BigInt m = q.sign() > 0 ? root : BigInt(-root - 1);
  BigInt k = 2 * p + q + m;
  return nt::floor_div(k, 2 * d);
}

GoldenReal GoldenReal::conjugate() const {
  return GoldenReal(rational_ + golden_, -golden_);
}

Fraction GoldenReal::norm() const {
  return rational_ * rational_ + rational_ * golden_ - golden_ * golden_;
}

GoldenReal GoldenReal::reciprocal() const {
  if (is_zero()) {
    throw InvalidArgument("reciprocal of zero");
  }
  Fraction n = norm();
  GoldenReal c = conjugate();
  return GoldenReal(c.rational_ / n, c.golden_ / n);
}

std::string GoldenReal::to_decimal(unsigned places) const {
  if (golden_.is_zero()) {
    return rational_.to_decimal(places);
  }
  GoldenReal magnitude = abs();
  GoldenReal scaled = magnitude * GoldenReal(Fraction(nt::pow10(places))) +
                      GoldenReal(Fraction(1, 2));
  BigInt rounded = scaled.floor();
  if (sign() < 0) {
    rounded = -rounded;
  }
  return nt::format_scaled_decimal(rounded, places);
}

double GoldenReal::to_double() const {
  if (golden_.is_zero()) {
    return rational_.to_double();
  }
  return std::strtod(to_decimal(20).c_str(), nullptr);
}

std::string GoldenReal::to_string() const {
  if (golden_.is_zero()) {
    return rational_.to_string();
  }
  std::string out;
  if (!rational_.is_zero()) {
    out = rational_.to_string();
    out += golden_.sign() < 0 ? "-" : "+";
    out += golden_.abs().to_string();
  } else {
    out = golden_.to_string();
  }
  out += "*phi";
  return out;
}

GoldenReal& GoldenReal::operator+=(const GoldenReal& rhs) {
  rational_ += rhs.rational_;
  golden_ += rhs.golden_;
  return *this;
}

GoldenReal& GoldenReal::operator-=(const GoldenReal& rhs) {
  rational_ -= rhs.rational_;
  golden_ -= rhs.golden_;
  return *this;
}

GoldenReal& GoldenReal::operator*=(const GoldenReal& rhs) {
  // (a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ
  if (golden_.is_zero() && rhs.golden_.is_zero()) {
    rational_ *= rhs.rational_;
    return *this;
  }
  Fraction bd = golden_ * rhs.golden_;
  Fraction r = rational_ * rhs.rational_ + bd;
  Fraction g = rational_ * rhs.golden_ + golden_ * rhs.rational_ + bd;
  rational_ = std::move(r);
  golden_ = std::move(g);
  return *this;
}

GoldenReal& GoldenReal::operator/=(const GoldenReal& rhs) {
  if (rhs.is_zero()) {
    throw InvalidArgument("division by zero");
  }
  if (rhs.golden_.is_zero()) {
    rational_ /= rhs.rational_;
    golden_ /= rhs.rational_;
    return *this;
  }
  return *this *= rhs.reciprocal();
}

}  // namespace quasitone::quasi

#include "quasitone/numbertheory/approximants.hpp"

#include <optional>
#include <string>

#include "quasitone/errors.hpp"

namespace quasitone::nt {

namespace {

struct Candidate {
  BigInt num;
  BigInt den;
};

// True when num/den is strictly closer to x than rec under `kind`.
//
// Both comparisons reduce to the sign of a product of two affine forms in x:
// |L1| < |L2|  <=>  (L2 - L1)(L2 + L1) > 0.
bool strictly_better(const Real& x, const Candidate& cand, const Candidate& rec,
                     ApproximantKind kind) {
  const BigInt& a = cand.num;
  const BigInt& b = cand.den;
  const BigInt& c = rec.num;
  const BigInt& d = rec.den;
  if (kind == ApproximantKind::SecondKind) {
    // L1 = b·x - a, L2 = d·x - c
    int s1 = x.sign_affine(Fraction(a - c), Fraction(d - b));
    if (s1 == 0) return false;
    int s2 = x.sign_affine(Fraction(-(a + c)), Fraction(d + b));
    return s1 * s2 > 0;
  }
  // L1 = d(b·x - a), L2 = b(d·x - c); their difference is the constant d·a - b·c.
  int s1 = BigInt(d * a - b * c).sign();
  if (s1 == 0) return false;
  int s2 = x.sign_affine(Fraction(-(d * a + b * c)), Fraction(2 * b * d));
  return s1 * s2 > 0;
}

}  // namespace

std::string_view to_string(ApproximantKind kind) {
  return kind == ApproximantKind::FirstKind ? "first" : "second";
}

ApproximantKind parse_approximant_kind(std::string_view text) {
  if (text == "first") return ApproximantKind::FirstKind;
  if (text == "second") return ApproximantKind::SecondKind;
  throw InvalidArgument("unknown approximant kind '" + std::string(text) +
                        "' (expected first or second)");
}

std::vector<Fraction> best_approximants(const Real& x, std::uint64_t max_denominator,
                                        ApproximantKind kind) {
  if (max_denominator == 0) {
    throw InvalidArgument("max_denominator must be >= 1");
  }
  std::vector<Fraction> out;
  // Closest fraction seen so far over all denominators below the current one.
  std::optional<Candidate> record;
  for (std::uint64_t den = 1; den <= max_denominator; ++den) {
    BigInt b(den);
    Real scaled = x * Real(Fraction(b));
    BigInt m = scaled.floor();
    // The only possible winner at denominator b is the unique nearest integer
    // to b·x; an exact midpoint has no winner.
    int side = x.sign_affine(Fraction(-(2 * m + 1)), Fraction(2 * b));
    BigInt a = side < 0 ? m : BigInt(m + 1);
    Candidate cand{a, b};
    if (!record || strictly_better(x, cand, *record, kind)) {
      if (side != 0 && boost::multiprecision::gcd(a, b) == 1) {
        out.emplace_back(a, b);
      }
      record = cand;
    }
  }
  return out;
}

Real approximation_error(const Real& x, const Fraction& approximant, ApproximantKind kind) {
  Real a(approximant);
  if (kind == ApproximantKind::SecondKind) {
    Real b(Fraction(approximant.denominator()));
    return (b * x - Real(Fraction(approximant.numerator()))).abs();
  }
  return (x - a).abs();
}

}  // namespace quasitone::nt

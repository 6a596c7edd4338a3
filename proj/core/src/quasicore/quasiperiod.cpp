#include "quasitone/quasicore/quasiperiod.hpp"

#include <cmath>

#include "quasitone/errors.hpp"

namespace quasitone::quasi {

using nt::BigInt;
using nt::Fraction;
using nt::Real;

namespace {

void require_positive(const Real& p, const char* name) {
  if (p.sign() <= 0) {
    throw ZeroPeriod(std::string(name) + " must be positive, got " + p.to_string());
  }
}

Real times(const BigInt& k, const Real& p) { return Real(Fraction(k)) * p; }

}  // namespace

std::vector<QuasiperiodReport> quasiperiods(const Real& p1, const Real& p2,
                                            std::uint64_t max_denominator,
                                            nt::ApproximantKind kind) {
  require_positive(p1, "p1");
  require_positive(p2, "p2");
  Real ratio = p2 / p1;
  std::vector<QuasiperiodReport> out;
  for (auto& a_over_b : nt::best_approximants(ratio, max_denominator, kind)) {
    if (a_over_b.is_zero()) {
      continue;  // 0/1 pairs nothing with b·p2; there is no coincidence at t > 0
    }
    Real first = times(a_over_b.numerator(), p1);
    Real second = times(a_over_b.denominator(), p2);
    Real gap = (first - second).abs();
    Real quasiperiod = compare(first, second) <= 0 ? first : second;
    out.push_back({std::move(a_over_b), std::move(first), std::move(second), std::move(gap),
                   std::move(quasiperiod)});
  }
  return out;
}

bool verify_near_coincidence(const Real& p1, const Real& p2, const QuasiperiodReport& report,
                             double scan_resolution) {
  require_positive(p1, "p1");
  require_positive(p2, "p2");
  const BigInt& a = report.approximant.numerator();
  const BigInt& b = report.approximant.denominator();
  Real gap = (times(a, p1) - times(b, p2)).abs();
  if (std::abs((gap - report.gap).to_double()) > scan_resolution) {
    return false;
  }
  // Both starts must come no later than the larger element of the pair.
  // Multiples of the same period are compared by index so that enclosures
  // never have to separate a value from itself.
  const bool first_is_later = compare(times(a, p1), times(b, p2)) >= 0;
  auto i_in_range = [&](const BigInt& i) {
    return first_is_later ? i <= a : compare(times(i, p1), times(b, p2)) <= 0;
  };
  auto j_in_range = [&](const BigInt& j) {
    return first_is_later ? compare(times(j, p2), times(a, p1)) <= 0 : j <= b;
  };
  // For each start i·p1 only the neighbouring starts j·p2 (j = floor and
  // floor + 1 of i·p1/p2) can minimise the gap; every other j is farther.
  Real ratio = p1 / p2;
  for (BigInt i = 0; i_in_range(i); ++i) {
    Real x = times(i, p1);
    BigInt j0 = (Real(Fraction(i)) * ratio).floor();
    for (BigInt j = j0; j <= j0 + 1; ++j) {
      if (j < 0 || (i == 0 && j == 0) || (i == a && j == b)) continue;
      if (!j_in_range(j)) continue;
      if (compare((x - times(j, p2)).abs(), gap) < 0) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace quasitone::quasi

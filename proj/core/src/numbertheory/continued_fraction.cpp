#include "quasitone/numbertheory/continued_fraction.hpp"

#include "quasitone/errors.hpp"

namespace quasitone::nt {

namespace {

ContinuedFraction expand_rational(const Fraction& x, std::size_t max_terms) {
  ContinuedFraction cf;
  BigInt p = x.numerator();
  BigInt q = x.denominator();
  while (cf.coefficients.size() < max_terms) {
    BigInt a = floor_div(p, q);
    cf.coefficients.push_back(a);
    BigInt r = p - a * q;
    if (r.is_zero()) {
      cf.terminated = true;
      break;
    }
    p = q;
    q = r;
  }
  return cf;
}

}  // namespace

ContinuedFraction expand_cf(const Real& x, std::size_t max_terms) {
  if (max_terms == 0) {
    throw InvalidArgument("expand_cf needs max_terms >= 1");
  }
  if (auto f = x.as_fraction()) {
    return expand_rational(*f, max_terms);
  }
  ContinuedFraction cf;
  Real rest = x;
  while (cf.coefficients.size() < max_terms) {
    BigInt a = rest.floor();
    cf.coefficients.push_back(a);
    Real frac = rest - Real(Fraction(a));
    if (frac.is_exact() && frac.to_golden().is_zero()) {
      cf.terminated = true;
      break;
    }
    if (cf.coefficients.size() == max_terms) {
      break;
    }
    rest = frac.reciprocal();
  }
  return cf;
}

std::vector<Fraction> convergents(const ContinuedFraction& cf) {
  if (cf.coefficients.empty()) {
    throw InvalidArgument("continued fraction has no coefficients");
  }
  std::vector<Fraction> out;
  out.reserve(cf.coefficients.size());
  BigInt p_prev = 1, p = cf.coefficients[0];
  BigInt q_prev = 0, q = 1;
  out.emplace_back(p, q);
  for (std::size_t k = 1; k < cf.coefficients.size(); ++k) {
    const BigInt& a = cf.coefficients[k];
    if (a < 1) {
      throw InvalidArgument("continued fraction coefficient after the first must be >= 1");
    }
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.emplace_back(p, q);
  }
  return out;
}

}  // namespace quasitone::nt

#pragma once

#include <cstddef>
#include <vector>

#include "quasitone/numbertheory/fraction.hpp"
#include "quasitone/numbertheory/real.hpp"

namespace quasitone::nt {

/// Simple continued fraction [a0; a1, a2, ...]. Every coefficient after the
/// first is at least 1. `terminated` is set when the expansion is complete,
/// i.e. the expanded value was rational and nothing is left over.
struct ContinuedFraction {
  std::vector<BigInt> coefficients;
  bool terminated = false;
};

/// First `max_terms` partial quotients of x. Throws PrecisionExhausted when
/// an enclosure is too wide to certify the next quotient.
ContinuedFraction expand_cf(const Real& x, std::size_t max_terms);

/// Convergents p_k/q_k via p_k = a_k p_{k-1} + p_{k-2}, q_k likewise.
std::vector<Fraction> convergents(const ContinuedFraction& cf);

}  // namespace quasitone::nt

#pragma once

#include <span>
#include <vector>

#include "quasitone/quasicore/golden_real.hpp"

namespace quasitone::quasi {

struct IndependenceResult {
  bool independent = true;
  /// Integers y, not all zero, with Σ y_i·ω_i = 0 (empty when independent).
  std::vector<BigInt> witness;
};

/// Decides rational independence of nonzero values in Q(φ).
///
/// Each value a + bφ is the vector (a, b) over Q; the values are independent
/// iff those vectors are, so three or more values are always dependent.
IndependenceResult rationally_independent(std::span<const GoldenReal> values);

}  // namespace quasitone::quasi

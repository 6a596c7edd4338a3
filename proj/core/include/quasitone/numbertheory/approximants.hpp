#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "quasitone/numbertheory/fraction.hpp"
#include "quasitone/numbertheory/real.hpp"

namespace quasitone::nt {

/// Which closeness measure defines "best".
///
/// SecondKind: a/b beats every other c/d with d <= b in |d·x - c| (the
/// classical definition; yields the convergents).
/// FirstKind: a/b beats every other c/d with d <= b in |x - c/d| (also
/// admits some semiconvergents, e.g. 13/4 for π).
enum class ApproximantKind { FirstKind, SecondKind };

std::string_view to_string(ApproximantKind kind);
ApproximantKind parse_approximant_kind(std::string_view text);

/// All reduced a/b with b <= max_denominator that are best approximants of x
/// of the given kind, sorted by denominator. Ties count against the
/// candidate (the defining inequality is strict).
std::vector<Fraction> best_approximants(const Real& x, std::uint64_t max_denominator,
                                        ApproximantKind kind);

/// |b·x - a| for SecondKind, |x - a/b| for FirstKind.
Real approximation_error(const Real& x, const Fraction& approximant, ApproximantKind kind);

}  // namespace quasitone::nt

#pragma once

#include <cstdint>
#include <vector>

#include "quasitone/numbertheory/approximants.hpp"
#include "quasitone/numbertheory/real.hpp"

namespace quasitone::quasi {

/// A near-coincidence of period starts: a repetitions of p1 against
/// b repetitions of p2, where a/b is a best approximant of p2/p1.
///
/// The quasiperiod is taken as the smaller element of the pair; both
/// elements are kept.
struct QuasiperiodReport {
  nt::Fraction approximant;
  nt::Real first;   // a·p1
  nt::Real second;  // b·p2
  nt::Real gap;     // |a·p1 − b·p2|
  nt::Real quasiperiod;
};

/// One report per best approximant a/b of p2/p1 with b <= max_denominator,
/// skipping 0/1 (possible when p2 < p1/2), which marks no coincidence.
/// Throws ZeroPeriod unless both periods are positive.
///
/// With SecondKind the gaps strictly decrease along the list; FirstKind can
/// include semiconvergents whose gap is larger than a predecessor's.
std::vector<QuasiperiodReport> quasiperiods(const nt::Real& p1, const nt::Real& p2,
                                            std::uint64_t max_denominator,
                                            nt::ApproximantKind kind);

/// Confirms a report: its stored gap matches the pair recomputed from the
/// approximant to within `scan_resolution`, and no other pair of period
/// starts (i·p1, j·p2), both no later than quasiperiod + gap, is strictly
/// closer.
bool verify_near_coincidence(const nt::Real& p1, const nt::Real& p2,
                             const QuasiperiodReport& report, double scan_resolution);

}  // namespace quasitone::quasi

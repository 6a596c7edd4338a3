#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasitone/quasicore/golden_real.hpp"
#include "quasitone/quasicore/independence.hpp"

namespace quasitone::score {

using nt::BigInt;
using nt::Fraction;
using quasi::GoldenReal;

/// A note inside one measure. Onset and duration are fractions of the
/// measure period; pitch is a MIDI note number (A4 = 69).
struct NoteEvent {
  Fraction onset_in_measure;
  int pitch = 69;
  double velocity = 0.8;
  Fraction duration = Fraction(1);

  void validate() const;
};

/// A measure that repeats forever with an exact (possibly irrational) period
/// in seconds.
struct Part {
  std::string name;
  GoldenReal measure_period;
  std::vector<NoteEvent> events;

  void validate() const;
};

struct Score {
  std::vector<Part> parts;
  bool independence_checked = false;
  /// Result of the last independence check, when one ran.
  std::optional<quasi::IndependenceResult> independence;
  std::vector<std::string> warnings;
  /// Horizon requested by a score file, in seconds.
  std::optional<Fraction> horizon;

  void validate() const;
  /// Runs the rational independence test over all measure periods, records
  /// the outcome, and adds a warning when they are dependent.
  void check_independence();
};

/// Period in seconds of a measure of `beats` beats at `bpm` beats per minute.
GoldenReal measure_period(const Fraction& beats, const GoldenReal& bpm);
/// Tempo in beats per minute of a measure of `beats` beats lasting `period` seconds.
GoldenReal tempo_bpm(const Fraction& beats, const GoldenReal& period);

/// Two bell parts in A minor: a 4/4 measure at 240 bpm (exactly 1 s) playing
/// A4 and E5, and a 6/4 measure at 360/φ bpm (exactly φ s) playing C5 and G5.
/// Within each measure the notes fall on onsets 0 and 1/2, ring for a full
/// measure, at velocity 0.8.
Score raindrops_preset();

/// Least common multiple of the cycle lengths: the number of base steps
/// after which stacked cycles realign.
BigInt combined_period(std::span<const BigInt> cycle_lengths);

}  // namespace quasitone::score

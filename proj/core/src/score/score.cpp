#include "quasitone/score/score.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "quasitone/errors.hpp"
#include "quasitone/score/pitch.hpp"

namespace quasitone::score {

void NoteEvent::validate() const {
  if (onset_in_measure.sign() < 0 || onset_in_measure >= Fraction(1)) {
    throw InvalidArgument("note onset " + onset_in_measure.to_string() +
                          " must lie in [0, 1) of the measure");
  }
  if (pitch < 0 || pitch > 127) {
    throw OutOfRange("pitch " + std::to_string(pitch) + " outside MIDI range 0..127");
  }
  if (!(velocity > 0.0 && velocity <= 1.0)) {
    throw InvalidArgument("velocity must lie in (0, 1]");
  }
  if (duration.sign() <= 0) {
    throw InvalidArgument("note duration must be positive");
  }
}

void Part::validate() const {
  if (measure_period.sign() <= 0) {
    throw InvalidPeriod("part '" + name + "' has non-positive period " +
                        measure_period.to_string());
  }
  if (events.empty()) {
    throw InvalidArgument("part '" + name + "' has no notes");
  }
  for (const auto& e : events) e.validate();
}

void Score::validate() const {
  if (parts.empty()) {
    throw EmptyScore("score has no parts");
  }
  for (const auto& p : parts) p.validate();
}

void Score::check_independence() {
  validate();
  std::vector<GoldenReal> periods;
  periods.reserve(parts.size());
  for (const auto& p : parts) periods.push_back(p.measure_period);
  independence = quasi::rationally_independent(periods);
  independence_checked = true;
  if (!independence->independent) {
    std::string w = "measure periods are rationally dependent; witness (";
    for (std::size_t i = 0; i < independence->witness.size(); ++i) {
      if (i) w += ", ";
      w += independence->witness[i].str();
    }
    w += "); the piece is periodic";
    warnings.push_back(std::move(w));
  }
}

GoldenReal measure_period(const Fraction& beats, const GoldenReal& bpm) {
  if (bpm.sign() <= 0 || beats.sign() <= 0) {
    throw InvalidPeriod("beats and tempo must be positive");
  }
  return GoldenReal(beats * Fraction(60)) / bpm;
}

GoldenReal tempo_bpm(const Fraction& beats, const GoldenReal& period) {
  if (period.sign() <= 0 || beats.sign() <= 0) {
    throw InvalidPeriod("beats and period must be positive");
  }
  return GoldenReal(beats * Fraction(60)) / period;
}

Score raindrops_preset() {
  const GoldenReal phi = GoldenReal::phi();
  const Fraction half(1, 2);
  auto bell = [&](int pitch, Fraction onset) {
    return NoteEvent{std::move(onset), pitch, 0.8, Fraction(1)};
  };
  Score s;
  s.parts.push_back(Part{"four-four",
                         measure_period(Fraction(4), GoldenReal(240)),
                         {bell(parse_pitch("A4"), Fraction(0)), bell(parse_pitch("E5"), half)}});
  s.parts.push_back(Part{"six-four",
                         measure_period(Fraction(6), GoldenReal(360) / phi),
                         {bell(parse_pitch("C5"), Fraction(0)), bell(parse_pitch("G5"), half)}});
  s.check_independence();
  return s;
}

BigInt combined_period(std::span<const BigInt> cycle_lengths) {
  if (cycle_lengths.empty()) {
    throw InvalidArgument("combined_period needs at least one cycle length");
  }
  BigInt result = 1;
  for (const auto& n : cycle_lengths) {
    if (n <= 0) {
      throw InvalidArgument("cycle lengths must be positive");
    }
    result = boost::multiprecision::lcm(result, n);
  }
  return result;
}

}  // namespace quasitone::score

#include "quasitone/score/schedule.hpp"

#include <algorithm>

#include "quasitone/errors.hpp"

namespace quasitone::score {

bool timeline_before(const TimelineEvent& a, const TimelineEvent& b) {
  int c = (a.onset - b.onset).sign();
  if (c != 0) return c < 0;
  if (a.part_index != b.part_index) return a.part_index < b.part_index;
  return a.pitch < b.pitch;
}

EventTimeline schedule(const Score& score, const Fraction& horizon) {
  if (score.parts.empty()) {
    throw EmptyScore("cannot schedule a score without parts");
  }
  if (horizon.sign() <= 0) {
    throw InvalidArgument("horizon must be positive");
  }
  score.validate();
  const GoldenReal end(horizon);
  EventTimeline timeline;
  timeline.horizon = horizon;
  for (std::size_t index = 0; index < score.parts.size(); ++index) {
    const Part& part = score.parts[index];
    std::vector<std::pair<Fraction, const NoteEvent*>> notes;
    for (const auto& n : part.events) notes.emplace_back(n.onset_in_measure, &n);
    for (BigInt k = 0;; ++k) {
      GoldenReal measure_start = GoldenReal(Fraction(k)) * part.measure_period;
      if (measure_start >= end) break;
      for (const auto& [offset, note] : notes) {
        GoldenReal onset = GoldenReal(Fraction(k) + offset) * part.measure_period;
        if (onset >= end) continue;
        timeline.events.push_back(TimelineEvent{std::move(onset), index, note->pitch,
                                                note->velocity,
                                                GoldenReal(note->duration) * part.measure_period});
      }
    }
  }
  std::sort(timeline.events.begin(), timeline.events.end(), timeline_before);
  return timeline;
}

}  // namespace quasitone::score

#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "quasitone/score/score.hpp"

namespace quasitone::score {

struct TimelineEvent {
  GoldenReal onset;  // seconds, exact
  std::size_t part_index = 0;
  int pitch = 69;
  double velocity = 0.8;
  GoldenReal duration;  // seconds, exact
};

/// Every note of every part over [0, horizon), sorted by exact onset with
/// ties broken by part index and then pitch.
struct EventTimeline {
  std::vector<TimelineEvent> events;
  Fraction horizon;
};

/// Strict order used to sort timelines.
bool timeline_before(const TimelineEvent& a, const TimelineEvent& b);

/// Repeats each part's measure at k·period for k = 0, 1, ... and keeps the
/// notes that start before `horizon` seconds. Throws EmptyScore.
EventTimeline schedule(const Score& score, const Fraction& horizon);

/// Writes the "# quasitone timeline v1" tab-separated export.
void write_timeline(std::ostream& out, const EventTimeline& timeline);

}  // namespace quasitone::score

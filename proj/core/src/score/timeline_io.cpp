#include "quasitone/score/schedule.hpp"

#include <iomanip>
#include <ostream>

#include "quasitone/errors.hpp"

namespace quasitone::score {

void write_timeline(std::ostream& out, const EventTimeline& timeline) {
  out << "# quasitone timeline v1\n";
  for (const auto& e : timeline.events) {
    out << e.onset.to_decimal(10) << '\t' << e.part_index << '\t' << e.pitch << '\t'
        << std::fixed << std::setprecision(10) << e.velocity << '\t'
        << e.duration.to_decimal(10) << '\n';
  }
  if (!out) {
    throw IoFailure("failed to write timeline");
  }
}

}  // namespace quasitone::score

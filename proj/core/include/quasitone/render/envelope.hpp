#pragma once

#include <algorithm>
#include <cmath>

namespace quasitone::render {

enum class EnvelopeFamily { Bell };

/// Struck-bell amplitude envelope: a short linear attack, exponential decay
/// e^(-t/τ) measured from the strike, and a linear release once the note's
/// duration has elapsed. Zero before the strike, continuous, within [0, 1].
struct EnvelopeSpec {
  double attack_seconds = 0.002;
  double decay_time_constant = 0.6;
  double release_seconds = 0.005;
  EnvelopeFamily family = EnvelopeFamily::Bell;

  double value(double t, double duration) const {
    if (t <= 0.0) return 0.0;
    double ramp = attack_seconds > 0.0 ? std::min(1.0, t / attack_seconds) : 1.0;
    double tail = 1.0;
    if (t > duration) {
      tail = release_seconds > 0.0 ? std::max(0.0, 1.0 - (t - duration) / release_seconds) : 0.0;
    }
    return ramp * std::exp(-t / decay_time_constant) * tail;
  }

  /// Time after the strike from which the envelope is identically zero.
  double active_span(double duration) const { return duration + release_seconds; }

  /// Upper bound on |d value / dt| (per second), ignoring the corners.
  double lipschitz_bound() const {
    double bound = 1.0 / decay_time_constant;
    if (attack_seconds > 0.0) bound += 1.0 / attack_seconds;
    if (release_seconds > 0.0) bound += 1.0 / release_seconds;
    return bound;
  }

  void validate() const;
};

}  // namespace quasitone::render

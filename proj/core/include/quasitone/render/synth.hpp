#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "quasitone/render/envelope.hpp"
#include "quasitone/score/schedule.hpp"

namespace quasitone::render {

struct RenderConfig {
  std::uint32_t sample_rate = 44100;
  std::uint16_t bit_depth = 16;
  std::uint16_t channels = 1;
  double master_gain = 0.25;
  EnvelopeSpec envelope;

  void validate() const;
};

/// 12-tone equal temperament, A4 (69) = 440 Hz. Throws OutOfRange outside 0..127.
double pitch_to_frequency(int pitch);

/// Number of samples covering [0, horizon): ceil(horizon · sample_rate).
std::size_t sample_count(const score::EventTimeline& timeline, const RenderConfig& config);

/// Sum of all tones before the master gain. Each event contributes
/// sin(2π f (t − onset)) · envelope(t − onset) · velocity, rounded to a
/// multiple of 2^-40 and added exactly, so mixing two timelines separately
/// and adding the buffers gives the same samples as mixing their union.
std::vector<double> mix(const score::EventTimeline& timeline, const RenderConfig& config);

/// mix() scaled by master_gain. Throws ClipError if any sample leaves
/// [-1, 1] and BufferTooLarge above 2^31 samples.
std::vector<double> render(const score::EventTimeline& timeline, const RenderConfig& config);

/// 16-bit quantization at full scale 32767, rounding half away from zero.
/// Throws ClipError beyond full scale.
std::vector<std::int16_t> quantize(std::span<const double> samples);

}  // namespace quasitone::render

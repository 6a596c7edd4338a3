#include "quasitone/render/synth.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "quasitone/errors.hpp"

namespace quasitone::render {

using nt::BigInt;
using nt::Fraction;
using quasi::GoldenReal;

void EnvelopeSpec::validate() const {
  if (!(attack_seconds >= 0.0) || !(release_seconds >= 0.0)) {
    throw InvalidArgument("envelope attack and release must be >= 0");
  }
  if (!(decay_time_constant > 0.0)) {
    throw InvalidArgument("envelope decay time constant must be > 0");
  }
}

void RenderConfig::validate() const {
  if (sample_rate < 8000) {
    throw InvalidArgument("sample rate must be >= 8000 Hz");
  }
  if (bit_depth != 16 || channels != 1) {
    throw InvalidArgument("only 16-bit mono output is supported");
  }
  if (!(master_gain > 0.0 && master_gain <= 1.0)) {
    throw InvalidArgument("master gain must lie in (0, 1]");
  }
  envelope.validate();
}

double pitch_to_frequency(int pitch) {
  if (pitch < 0 || pitch > 127) {
    throw OutOfRange("pitch " + std::to_string(pitch) + " outside 0..127");
  }
  return 440.0 * std::exp2((pitch - 69) / 12.0);
}

std::size_t sample_count(const score::EventTimeline& timeline, const RenderConfig& config) {
  BigInt n = (timeline.horizon * Fraction(static_cast<std::int64_t>(config.sample_rate))).ceil();
  if (n < 0) n = 0;
  if (n > BigInt(1) << 31) {
    throw BufferTooLarge("horizon needs " + n.str() + " samples, limit is 2^31");
  }
  return static_cast<std::size_t>(n);
}

namespace {

// Tones are summed as integers in units of 2^-40 so that the mix does not
// depend on how events are grouped.
constexpr double kFixedScale = 1099511627776.0;  // 2^40

}  // namespace

std::vector<double> mix(const score::EventTimeline& timeline, const RenderConfig& config) {
  config.validate();
  const std::size_t total = sample_count(timeline, config);
  std::vector<std::int64_t> acc(total, 0);
  const double rate = config.sample_rate;
  const GoldenReal rate_exact(Fraction(static_cast<std::int64_t>(config.sample_rate)));
  for (const auto& event : timeline.events) {
    const double freq = pitch_to_frequency(event.pitch);
    // Sample index of the onset, found exactly; only the sub-sample offset is
    // rounded to double.
    GoldenReal position = event.onset * rate_exact;
    BigInt first = position.floor();
    if (first < 0 || first >= total) continue;
    const double offset = (position - GoldenReal(Fraction(first))).to_double();
    const double duration = event.duration.to_double();
    const double span = config.envelope.active_span(duration);
    const auto start = static_cast<std::size_t>(first);
    const auto length = static_cast<std::size_t>(std::ceil(span * rate)) + 2;
    const std::size_t stop = std::min(total, start + length);
    for (std::size_t n = start; n < stop; ++n) {
      const double t = (static_cast<double>(n - start) - offset) / rate;
      const double env = config.envelope.value(t, duration);
      if (env == 0.0) continue;
      const double value = std::sin(2.0 * std::numbers::pi * freq * t) * env * event.velocity;
      acc[n] += std::llround(value * kFixedScale);
    }
  }
  std::vector<double> buffer(total);
  for (std::size_t n = 0; n < total; ++n) {
    buffer[n] = static_cast<double>(acc[n]) / kFixedScale;
  }
  return buffer;
}

std::vector<double> render(const score::EventTimeline& timeline, const RenderConfig& config) {
  std::vector<double> samples = mix(timeline, config);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] *= config.master_gain;
    if (!(std::abs(samples[i]) <= 1.0)) {
      throw ClipError("sample " + std::to_string(i) + " reaches " + std::to_string(samples[i]) +
                      " of full scale; lower master_gain");
    }
  }
  return samples;
}

std::vector<std::int16_t> quantize(std::span<const double> samples) {
  std::vector<std::int16_t> out;
  out.reserve(samples.size());
  for (double s : samples) {
    if (!std::isfinite(s)) {
      throw InvalidArgument("non-finite sample");
    }
    if (std::abs(s) > 1.0) {
      throw ClipError("sample " + std::to_string(s) + " beyond full scale");
    }
    out.push_back(static_cast<std::int16_t>(std::round(s * 32767.0)));
  }
  return out;
}

}  // namespace quasitone::render

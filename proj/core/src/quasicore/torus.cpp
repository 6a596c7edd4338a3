#include "quasitone/quasicore/torus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quasitone/errors.hpp"

namespace quasitone::quasi {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

FrequencyVector::FrequencyVector(std::vector<nt::Real> entries, FrequencyUnits units)
    : entries_(std::move(entries)), units_(units) {
  if (entries_.empty()) {
    throw InvalidArgument("frequency vector must have at least one entry");
  }
  for (const auto& w : entries_) {
    if (w.sign() == 0) {
      throw InvalidArgument("frequency entries must be nonzero");
    }
  }
}

FrequencyVector FrequencyVector::from_periods(std::span<const nt::Real> periods) {
  std::vector<nt::Real> freqs;
  freqs.reserve(periods.size());
  for (const auto& p : periods) {
    if (p.sign() <= 0) {
      throw ZeroPeriod("periods must be positive");
    }
    freqs.push_back(p.reciprocal());
  }
  return FrequencyVector(std::move(freqs), FrequencyUnits::CyclesPerUnit);
}

double FrequencyVector::angular(std::size_t i) const {
  double w = entries_.at(i).to_double();
  return units_ == FrequencyUnits::CyclesPerUnit ? kTwoPi * w : w;
}

TorusComponent TorusComponent::sine(std::size_t channel, double amplitude) {
  TorusComponent c;
  c.kind_ = Kind::Sine;
  c.channel_ = channel;
  c.amplitude_ = amplitude;
  return c;
}

TorusComponent TorusComponent::bell_train(double cycle_seconds, std::vector<BellStrike> strikes,
                                          render::EnvelopeSpec envelope) {
  if (!(cycle_seconds > 0.0)) {
    throw ZeroPeriod("bell train cycle must be positive");
  }
  for (const auto& s : strikes) {
    if (s.phase < 0.0 || s.phase >= 1.0) {
      throw InvalidArgument("strike phase must lie in [0, 1)");
    }
  }
  envelope.validate();
  TorusComponent c;
  c.kind_ = Kind::BellTrain;
  c.cycle_seconds_ = cycle_seconds;
  c.strikes_ = std::move(strikes);
  c.envelope_ = envelope;
  return c;
}

void TorusComponent::accumulate(double angle, std::span<double> out) const {
  double theta = wrap_angle(angle);
  if (kind_ == Kind::Sine) {
    out[channel_] += amplitude_ * std::sin(theta);
    return;
  }
  double u = theta / kTwoPi;
  for (const auto& s : strikes_) {
    double since = u - s.phase;
    if (since < 0.0) since += 1.0;
    // earlier turns still ringing contribute too
    double span = envelope_.active_span(s.duration_seconds);
    for (double t = since * cycle_seconds_; t < span; t += cycle_seconds_) {
      out[s.channel] += s.velocity * envelope_.value(t, s.duration_seconds);
    }
  }
}

double TorusComponent::lipschitz_per_radian() const {
  if (kind_ == Kind::Sine) {
    return std::abs(amplitude_);
  }
  double per_second = 0.0;
  for (const auto& s : strikes_) {
    double turns = std::ceil(envelope_.active_span(s.duration_seconds) / cycle_seconds_) + 1.0;
    per_second += std::abs(s.velocity) * envelope_.lipschitz_bound() * turns;
  }
  return per_second * cycle_seconds_ / kTwoPi;
}

std::size_t TorusComponent::channels_used() const {
  if (kind_ == Kind::Sine) return channel_ + 1;
  std::size_t m = 0;
  for (const auto& s : strikes_) m = std::max(m, s.channel + 1);
  return m;
}

TorusFunction::TorusFunction(std::vector<TorusComponent> components, std::size_t output_dimension)
    : components_(std::move(components)), output_dimension_(output_dimension) {
  if (components_.empty() || output_dimension_ == 0) {
    throw InvalidArgument("torus function needs at least one component and one output");
  }
  for (const auto& c : components_) {
    if (c.channels_used() > output_dimension_) {
      throw DimensionMismatch("component writes channel beyond output dimension " +
                              std::to_string(output_dimension_));
    }
  }
}

std::vector<double> TorusFunction::operator()(std::span<const double> angles) const {
  if (angles.size() != components_.size()) {
    throw DimensionMismatch("expected " + std::to_string(components_.size()) +
                            " torus coordinates, got " + std::to_string(angles.size()));
  }
  std::vector<double> out(output_dimension_, 0.0);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i].accumulate(angles[i], out);
  }
  return out;
}

std::vector<double> evaluate(const TorusFunction& q, const FrequencyVector& omega, double x) {
  if (omega.size() != q.size()) {
    throw DimensionMismatch("frequency vector has " + std::to_string(omega.size()) +
                            " entries but Q has " + std::to_string(q.size()) + " components");
  }
  std::vector<double> angles(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    angles[i] = wrap_angle(x * omega.angular(i));
  }
  return q(angles);
}

}  // namespace quasitone::quasi

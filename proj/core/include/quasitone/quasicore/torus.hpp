#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quasitone/numbertheory/real.hpp"
#include "quasitone/render/envelope.hpp"

namespace quasitone::quasi {

enum class FrequencyUnits { RadiansPerUnit, CyclesPerUnit };

/// Frequencies ω_1..ω_n of a quasiperiodic function f(x) = Q(xω_1, ..., xω_n).
class FrequencyVector {
 public:
  FrequencyVector(std::vector<nt::Real> entries, FrequencyUnits units);

  /// Frequencies for the given periods: ω_i = 1/p_i cycles per unit.
  static FrequencyVector from_periods(std::span<const nt::Real> periods);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<nt::Real>& entries() const noexcept { return entries_; }
  FrequencyUnits units() const noexcept { return units_; }
  /// ω_i in radians per unit of x.
  double angular(std::size_t i) const;

 private:
  std::vector<nt::Real> entries_;
  FrequencyUnits units_;
};

/// One strike of a bell-train component: at `phase` ∈ [0, 1) of the cycle,
/// into output channel `channel`.
struct BellStrike {
  double phase;
  std::size_t channel;
  double velocity;
  double duration_seconds;
};

/// A 2π-periodic function of one torus coordinate with values in R^m.
class TorusComponent {
 public:
  static TorusComponent sine(std::size_t channel, double amplitude = 1.0);
  /// Periodic train of bell envelopes; one turn of the circle spans
  /// `cycle_seconds` of time.
  static TorusComponent bell_train(double cycle_seconds, std::vector<BellStrike> strikes,
                                   render::EnvelopeSpec envelope);

  /// Adds this component's value at `angle` (radians, any real) into `out`.
  void accumulate(double angle, std::span<double> out) const;
  /// Bound on the change of any output per radian of angle.
  double lipschitz_per_radian() const;
  std::size_t channels_used() const;

 private:
  enum class Kind { Sine, BellTrain };
  Kind kind_ = Kind::Sine;
  std::size_t channel_ = 0;
  double amplitude_ = 1.0;
  double cycle_seconds_ = 1.0;
  std::vector<BellStrike> strikes_;
  render::EnvelopeSpec envelope_;
};

/// Separable torus function Q(v_1..v_n) = Σ Q_i(v_i), values in R^m.
class TorusFunction {
 public:
  TorusFunction(std::vector<TorusComponent> components, std::size_t output_dimension);

  std::size_t size() const noexcept { return components_.size(); }
  std::size_t output_dimension() const noexcept { return output_dimension_; }
  const TorusComponent& component(std::size_t i) const { return components_.at(i); }

  std::vector<double> operator()(std::span<const double> angles) const;

 private:
  std::vector<TorusComponent> components_;
  std::size_t output_dimension_;
};

/// f(x) = Q(xω_1 mod 2π, ..., xω_n mod 2π). Throws DimensionMismatch when
/// the frequency count differs from the component count.
std::vector<double> evaluate(const TorusFunction& q, const FrequencyVector& omega, double x);

/// Reduces an angle into [0, 2π).
double wrap_angle(double angle);

}  // namespace quasitone::quasi

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "quasitone/errors.hpp"
#include "quasitone/quasicore/quasiperiod.hpp"
#include "quasitone/quasicore/torus.hpp"

namespace quasitone::quasi {
namespace {

using nt::Real;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

TorusFunction two_sines() {
  return TorusFunction({TorusComponent::sine(0), TorusComponent::sine(0)}, 1);
}

FrequencyVector one_and_two_pi() {
  return FrequencyVector({Real(1), Real(2) * Real::pi()}, FrequencyUnits::RadiansPerUnit);
}

TEST(TorusTest, SineSumAtZero) {
  auto v = evaluate(two_sines(), one_and_two_pi(), 0.0);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], 0.0);
}

TEST(TorusTest, SineSumAtQuarter) {
  auto v = evaluate(two_sines(), one_and_two_pi(), 0.25);
  EXPECT_NEAR(v[0], std::sin(0.25) + 1.0, 1e-12);
  EXPECT_NEAR(v[0], 1.2474, 1e-4);
}

TEST(TorusTest, BellTrainsVanishAtStart) {
  // notes end before the next strike on the same circle, so nothing rings at 0
  render::EnvelopeSpec env;
  TorusFunction q({TorusComponent::bell_train(1.0, {{0.0, 0, 1.0, 0.4}, {0.5, 1, 0.7, 0.4}}, env),
                   TorusComponent::bell_train(1.5, {{0.0, 2, 1.0, 0.5}}, env)},
                  3);
  FrequencyVector omega({Real(1), Real(nt::Fraction(nt::BigInt(2), nt::BigInt(3)))},
                        FrequencyUnits::CyclesPerUnit);
  auto v = evaluate(q, omega, 0.0);
  EXPECT_EQ(v, std::vector<double>(3, 0.0));
}

TEST(TorusTest, DimensionMismatch) {
  FrequencyVector three({Real(1), Real(2), Real(3)}, FrequencyUnits::RadiansPerUnit);
  EXPECT_THROW(evaluate(two_sines(), three, 0.0), DimensionMismatch);
  std::vector<double> angles{0.0};
  EXPECT_THROW(two_sines()(angles), DimensionMismatch);
  EXPECT_THROW(TorusFunction({TorusComponent::sine(2)}, 2), DimensionMismatch);
}

TEST(TorusTest, FrequencyValidation) {
  EXPECT_THROW(FrequencyVector({Real(0)}, FrequencyUnits::RadiansPerUnit), InvalidArgument);
  EXPECT_THROW(FrequencyVector({}, FrequencyUnits::RadiansPerUnit), InvalidArgument);
  std::vector<Real> periods{Real(1), Real(-2)};
  EXPECT_THROW(FrequencyVector::from_periods(periods), ZeroPeriod);
}

TEST(TorusTest, WrapAngle) {
  EXPECT_EQ(wrap_angle(0.0), 0.0);
  EXPECT_NEAR(wrap_angle(-1.0), kTwoPi - 1.0, 1e-15);
  EXPECT_NEAR(wrap_angle(kTwoPi + 0.5), 0.5, 1e-15);
  for (double a = -100.0; a < 100.0; a += 0.37) {
    double w = wrap_angle(a);
    EXPECT_GE(w, 0.0);
    EXPECT_LT(w, kTwoPi);
  }
}

TEST(TorusTest, ComponentsAreTwoPiPeriodic) {
  render::EnvelopeSpec env;
  std::vector<TorusComponent> comps{
      TorusComponent::sine(0, 0.7),
      TorusComponent::bell_train(1.0, {{0.0, 0, 0.8, 1.0}, {0.5, 0, 0.8, 1.0}}, env),
      TorusComponent::bell_train(std::numbers::phi, {{0.0, 0, 0.8, std::numbers::phi},
                                                     {0.5, 0, 0.8, std::numbers::phi}},
                                 env)};
  for (const auto& c : comps) {
    for (double theta = 0.0; theta < kTwoPi; theta += 1e-3) {
      double a[1] = {0.0}, b[1] = {0.0};
      c.accumulate(theta, a);
      c.accumulate(theta + kTwoPi, b);
      ASSERT_NEAR(a[0], b[0], 1e-12) << theta;
    }
  }
}

TEST(TorusTest, SingleComponentIsPlainlyPeriodic) {
  TorusFunction q({TorusComponent::sine(0)}, 1);
  FrequencyVector omega({Real::phi()}, FrequencyUnits::RadiansPerUnit);
  double period = kTwoPi / std::numbers::phi;
  for (double x = 0.0; x < 10.0; x += 1e-3) {
    ASSERT_NEAR(evaluate(q, omega, x + period)[0], evaluate(q, omega, x)[0], 1e-12) << x;
  }
}

TEST(TorusTest, ShiftByQuasiperiodIsBoundedByGap) {
  // Raindrops-shaped bell trains: periods 1 and φ, two strikes each.
  render::EnvelopeSpec env;
  const double phi = std::numbers::phi;
  TorusFunction q({TorusComponent::bell_train(1.0, {{0.0, 0, 0.8, 1.0}, {0.5, 1, 0.8, 1.0}}, env),
                   TorusComponent::bell_train(phi, {{0.0, 2, 0.8, phi}, {0.5, 3, 0.8, phi}}, env)},
                  4);
  std::vector<Real> periods{Real(1), Real::phi()};
  auto omega = FrequencyVector::from_periods(periods);
  // A shift by δ moves coordinate i by 2π·δ/p_i radians.
  double lipschitz = q.component(0).lipschitz_per_radian() * kTwoPi / 1.0 +
                     q.component(1).lipschitz_per_radian() * kTwoPi / phi;
  auto reports = quasiperiods(Real(1), Real::phi(), 5, nt::ApproximantKind::SecondKind);
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) {
    double t = r.quasiperiod.to_double();
    double bound = lipschitz * r.gap.to_double() + 1e-9;
    for (int k = 0; k <= 50000; ++k) {
      double x = k * 1e-3;
      auto a = evaluate(q, omega, x);
      auto b = evaluate(q, omega, x + t);
      for (std::size_t c = 0; c < a.size(); ++c) {
        ASSERT_LE(std::abs(b[c] - a[c]), bound) << "T=" << t << " x=" << x;
      }
    }
  }
}

}  // namespace
}  // namespace quasitone::quasi

#include <gtest/gtest.h>

#include <random>

#include "quasitone/errors.hpp"
#include "quasitone/numbertheory/approximants.hpp"
#include "quasitone/numbertheory/continued_fraction.hpp"
#include "support/oracles.hpp"

namespace quasitone::nt {
namespace {

using testing::Int;

std::vector<std::pair<Int, Int>> as_pairs(const std::vector<Fraction>& fs) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& f : fs) {
    out.emplace_back(static_cast<Int>(f.numerator()), static_cast<Int>(f.denominator()));
  }
  return out;
}

std::vector<Fraction> fracs(std::initializer_list<std::pair<Int, Int>> xs) {
  std::vector<Fraction> out;
  for (auto [a, b] : xs) out.emplace_back(BigInt(a), BigInt(b));
  return out;
}

TEST(ApproximantsTest, PiFirstKindMatchesPublishedList) {
  auto got = best_approximants(Real::pi(), 113, ApproximantKind::FirstKind);
  EXPECT_EQ(got, fracs({{3, 1}, {13, 4}, {16, 5}, {19, 6}, {22, 7}, {179, 57}, {201, 64},
                        {223, 71}, {245, 78}, {267, 85}, {289, 92}, {311, 99}, {333, 106},
                        {355, 113}}));
}

TEST(ApproximantsTest, PiSecondKindAreConvergents) {
  auto got = best_approximants(Real::pi(), 113, ApproximantKind::SecondKind);
  EXPECT_EQ(got, fracs({{3, 1}, {22, 7}, {333, 106}, {355, 113}}));
}

TEST(ApproximantsTest, GoldenRatioTruncatedAtEight) {
  auto got = best_approximants(Real::phi(), 8, ApproximantKind::SecondKind);
  EXPECT_EQ(got, fracs({{2, 1}, {3, 2}, {5, 3}, {8, 5}, {13, 8}}));
  got = best_approximants(Real::phi(), 7, ApproximantKind::SecondKind);
  EXPECT_EQ(got, fracs({{2, 1}, {3, 2}, {5, 3}, {8, 5}}));
}

TEST(ApproximantsTest, NineteenThirdsIsBestOfBothKindsForTwoPi) {
  Real two_pi = Real(2) * Real::pi();
  EXPECT_EQ(best_approximants(two_pi, 3, ApproximantKind::FirstKind).back(),
            Fraction(BigInt(19), BigInt(3)));
  EXPECT_EQ(best_approximants(two_pi, 3, ApproximantKind::SecondKind).back(),
            Fraction(BigInt(19), BigInt(3)));
}

TEST(ApproximantsTest, ExactTiesExcludeCandidate) {
  // x = 1/2: both 0/1 and 1/1 are equally close, so neither wins at b = 1.
  auto got = best_approximants(Real(Fraction(BigInt(1), BigInt(2))), 10,
                               ApproximantKind::SecondKind);
  EXPECT_EQ(got, fracs({{1, 2}}));
  auto seven_thirds = Real(Fraction(BigInt(7), BigInt(3)));
  EXPECT_EQ(best_approximants(seven_thirds, 50, ApproximantKind::SecondKind),
            fracs({{2, 1}, {7, 3}}));
  EXPECT_EQ(best_approximants(seven_thirds, 50, ApproximantKind::FirstKind),
            fracs({{2, 1}, {5, 2}, {7, 3}}));
}

TEST(ApproximantsTest, ZeroMaxDenominatorRejected) {
  EXPECT_THROW(best_approximants(Real::phi(), 0, ApproximantKind::FirstKind), InvalidArgument);
}

TEST(ApproximantsTest, CoarseEnclosureRaisesPrecisionExhausted) {
  EXPECT_THROW(best_approximants(Real::from_truncated_decimal("3.14159"), 2000,
                                 ApproximantKind::SecondKind),
               PrecisionExhausted);
}

TEST(ApproximantsTest, MatchesBruteForceOracle) {
  struct Case {
    Real value;
    testing::Target target;
  };
  std::vector<Case> cases{{Real::pi(), testing::pi_target()},
                          {Real::phi(), testing::golden_target()},
                          {Real(Fraction(BigInt(7), BigInt(3))), testing::rational_target(7, 3)},
                          {Real(Fraction(BigInt(-5), BigInt(12))),
                           testing::rational_target(-5, 12)}};
  for (const auto& c : cases) {
    for (bool first : {true, false}) {
      auto kind = first ? ApproximantKind::FirstKind : ApproximantKind::SecondKind;
      EXPECT_EQ(as_pairs(best_approximants(c.value, 300, kind)),
                testing::brute_force_best(c.target, 300, first));
    }
  }
}

TEST(ApproximantsTest, RandomRationalsMatchBruteForce) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> num(-400, 400), den(1, 60);
  for (int i = 0; i < 40; ++i) {
    Int p = num(rng), q = den(rng);
    Real x{Fraction(BigInt(p), BigInt(q))};
    for (bool first : {true, false}) {
      auto kind = first ? ApproximantKind::FirstKind : ApproximantKind::SecondKind;
      EXPECT_EQ(as_pairs(best_approximants(x, 80, kind)),
                testing::brute_force_best(testing::rational_target(p, q), 80, first))
          << p << "/" << q;
    }
  }
}

TEST(ApproximantsTest, SecondKindAreConvergents) {
  auto check = [](const Real& x, std::size_t terms, std::uint64_t max_den) {
    auto conv = convergents(expand_cf(x, terms));
    for (const auto& f : best_approximants(x, max_den, ApproximantKind::SecondKind)) {
      if (f.denominator() == 1) continue;
      EXPECT_NE(std::find(conv.begin(), conv.end(), f), conv.end()) << f;
    }
  };
  check(Real::phi(), 30, 100000);
  check(Real::pi(), 12, 100000);
  check(Real(Fraction(BigInt(1393), BigInt(972))), 50, 2000);
}

TEST(ApproximantsTest, ErrorsUseTheKindsMeasure) {
  Fraction f(BigInt(22), BigInt(7));
  EXPECT_EQ(approximation_error(Real::pi(), f, ApproximantKind::SecondKind).to_decimal(10),
            "0.0088514249");
  EXPECT_EQ(approximation_error(Real::pi(), f, ApproximantKind::FirstKind).to_decimal(10),
            "0.0012644893");
}

}  // namespace
}  // namespace quasitone::nt

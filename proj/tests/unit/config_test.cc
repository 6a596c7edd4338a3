#include <gtest/gtest.h>

#include "quasitone/errors.hpp"
#include "quasitone/score/config.hpp"

namespace quasitone::score {
namespace {

constexpr const char* kRaindrops = R"(# two bells
horizon 60

part four-four period 1
note A4 at 0 vel 0.8 dur 1
note E5 at 1/2 vel 0.8 dur 1

part six-four period phi   # golden measure
note C5 at 0 vel 0.8 dur 1
note G5 at 1/2 vel 0.8 dur 1
)";

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_score(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ConfigTest, RaindropsEquivalent) {
  Score s = parse_score(kRaindrops);
  ASSERT_EQ(s.parts.size(), 2u);
  EXPECT_EQ(s.parts[0].measure_period, GoldenReal(1));
  EXPECT_EQ(s.parts[1].measure_period, GoldenReal::phi());
  EXPECT_EQ(s.parts[1].name, "six-four");
  ASSERT_EQ(s.parts[0].events.size(), 2u);
  EXPECT_EQ(s.parts[0].events[1].pitch, 76);
  EXPECT_EQ(s.parts[0].events[1].onset_in_measure, Fraction(BigInt(1), BigInt(2)));
  EXPECT_EQ(s.parts[0].events[1].velocity, 0.8);
  EXPECT_TRUE(s.independence_checked);
  EXPECT_TRUE(s.independence->independent);
  EXPECT_TRUE(s.warnings.empty());
  ASSERT_TRUE(s.horizon.has_value());
  EXPECT_EQ(*s.horizon, Fraction(60));
}

TEST(ConfigTest, DependentPeriodsWarn) {
  Score s = parse_score("part a period 1\nnote A4 at 0 vel 1 dur 1\n"
                        "part b period 3/2\nnote 60 at 0 vel 1 dur 1\n");
  ASSERT_TRUE(s.independence.has_value());
  EXPECT_FALSE(s.independence->independent);
  EXPECT_EQ(s.independence->witness, (std::vector<BigInt>{3, -2}));
  ASSERT_EQ(s.warnings.size(), 1u);
  EXPECT_NE(s.warnings[0].find("(3, -2)"), std::string::npos);
}

TEST(ConfigTest, GoldenPeriodExpressions) {
  EXPECT_EQ(parse_golden("phi"), GoldenReal::phi());
  EXPECT_EQ(parse_golden("1+1/2*phi"),
            GoldenReal(Fraction(1), Fraction(BigInt(1), BigInt(2))));
  EXPECT_EQ(parse_golden("3/4"), GoldenReal(Fraction(BigInt(3), BigInt(4))));
  EXPECT_EQ(parse_golden("2-phi"), GoldenReal(Fraction(2), Fraction(-1)));
  EXPECT_THROW(parse_golden("pi"), InexactValue);
}

TEST(ConfigTest, NonPositivePeriods) {
  EXPECT_THROW(parse_score("part a period 0\nnote A4 at 0 vel 1 dur 1\n"), InvalidPeriod);
  EXPECT_THROW(parse_score("part a period 1-phi\nnote A4 at 0 vel 1 dur 1\n"), InvalidPeriod);
}

TEST(ConfigTest, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("part a period 1\nnote A4 at 0 vel 1\n"), 2u);
  EXPECT_EQ(parse_error_line("# c\n\npart a period 1\nnote A4 at 1 vel 1 dur 1\n"), 4u);
  EXPECT_EQ(parse_error_line("note A4 at 0 vel 1 dur 1\n"), 1u);
  EXPECT_EQ(parse_error_line("part a period 1\nnote A4 at 0 vel 1 dur 1\ntempo 3\n"), 3u);
  EXPECT_EQ(parse_error_line("part a period x\n"), 1u);
  EXPECT_EQ(parse_error_line("part a period pi\n"), 1u);
  EXPECT_EQ(parse_error_line("horizon -2\npart a period 1\n"), 1u);
  EXPECT_EQ(parse_error_line("part a period 1\nnote A4 at 0 vel 0 dur 1\n"), 2u);
  EXPECT_NE(parse_error_line("part a period 1\n"), 0u);
  EXPECT_NE(parse_error_line(""), 0u);
}

TEST(ConfigTest, UnknownPitchName) {
  try {
    parse_score("part a period 1\nnote H4 at 0 vel 1 dur 1\n");
    FAIL() << "expected UnknownPitchName";
  } catch (const UnknownPitchName& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

}  // namespace
}  // namespace quasitone::score

#include "quasitone/numbertheory/real.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <string>

#include "quasitone/errors.hpp"

namespace quasitone::nt {

namespace {

constexpr std::string_view kPiDigits =
    "3."
    "1415926535897932384626433832795028841971693993751058209749445923078164"
    "062862089986280348253421170679";

// Golden values are enclosed to this many decimal places when they meet an
// interval operand.
constexpr unsigned kGoldenEnclosureDigits = 80;

RationalInterval enclose(const GoldenReal& x) {
  if (x.is_rational()) {
    return {x.rational_part(), x.rational_part()};
  }
  BigInt scale = pow10(kGoldenEnclosureDigits);
  BigInt low = (x * GoldenReal(Fraction(scale))).floor();
  return {Fraction(low, scale), Fraction(low + 1, scale)};
}

RationalInterval as_interval_of(const std::variant<Fraction, GoldenReal, RationalInterval>& v) {
  if (auto f = std::get_if<Fraction>(&v)) {
    return {*f, *f};
  }
  if (auto g = std::get_if<GoldenReal>(&v)) {
    return enclose(*g);
  }
  return std::get<RationalInterval>(v);
}

[[noreturn]] void exhausted(const std::string& what) {
  throw PrecisionExhausted(what + " is not decidable at the supplied precision");
}

}  // namespace

Real::Real(GoldenReal x) {
  if (x.is_rational()) {
    value_ = x.rational_part();
  } else {
    value_ = std::move(x);
  }
}

Real::Real(RationalInterval x) {
  if (x.upper < x.lower) {
    std::swap(x.lower, x.upper);
  }
  if (x.lower == x.upper) {
    value_ = std::move(x.lower);
  } else {
    value_ = std::move(x);
  }
}

Real Real::pi(unsigned digits) {
  constexpr unsigned kAvailable = 100;
  if (digits == 0 || digits > kAvailable) {
    throw InvalidArgument("pi is available to 1..100 decimal places");
  }
  return from_truncated_decimal(kPiDigits.substr(0, 2 + digits));
}

Real Real::from_truncated_decimal(std::string_view text) {
  Fraction value = Fraction::parse(text);
  auto dot = text.find('.');
  unsigned places = dot == std::string_view::npos
                        ? 0
                        : static_cast<unsigned>(text.size() - dot - 1);
  Fraction ulp(1, pow10(places));
  if (value.sign() < 0 || (!text.empty() && text[0] == '-')) {
    return Real(RationalInterval{value - ulp, value});
  }
  return Real(RationalInterval{value, value + ulp});
}

GoldenReal Real::to_golden() const {
  if (auto f = std::get_if<Fraction>(&value_)) {
    return GoldenReal(*f);
  }
  if (auto g = std::get_if<GoldenReal>(&value_)) {
    return *g;
  }
  throw InexactValue("value " + to_string() + " is not exactly representable in Q(phi)");
}

int Real::sign_affine(const Fraction& c0, const Fraction& c1) const {
  if (c1.is_zero()) {
    return c0.sign();
  }
  if (auto f = std::get_if<Fraction>(&value_)) {
    return (c0 + c1 * *f).sign();
  }
  if (auto g = std::get_if<GoldenReal>(&value_)) {
    return (GoldenReal(c0) + GoldenReal(c1) * *g).sign();
  }
  const auto& iv = std::get<RationalInterval>(value_);
  int lo = (c0 + c1 * iv.lower).sign();
  int hi = (c0 + c1 * iv.upper).sign();
  if (lo != hi || lo == 0) {
    exhausted("sign of an affine form");
  }
  return lo;
}

BigInt Real::floor() const {
  if (auto f = std::get_if<Fraction>(&value_)) {
    return f->floor();
  }
  if (auto g = std::get_if<GoldenReal>(&value_)) {
    return g->floor();
  }
  const auto& iv = std::get<RationalInterval>(value_);
  BigInt lo = iv.lower.floor();
  if (lo != iv.upper.floor()) {
    exhausted("integer part");
  }
  return lo;
}

Real Real::abs() const { return sign() < 0 ? -*this : *this; }

Real Real::reciprocal() const {
  if (auto f = std::get_if<Fraction>(&value_)) {
    return Real(f->reciprocal());
  }
  if (auto g = std::get_if<GoldenReal>(&value_)) {
    return Real(g->reciprocal());
  }
  const auto& iv = std::get<RationalInterval>(value_);
  if (iv.lower.sign() != iv.upper.sign() || iv.lower.is_zero()) {
    exhausted("reciprocal of an interval around zero");
  }
  return Real(RationalInterval{iv.upper.reciprocal(), iv.lower.reciprocal()});
}

double Real::to_double() const {
  if (auto f = std::get_if<Fraction>(&value_)) {
    return f->to_double();
  }
  if (auto g = std::get_if<GoldenReal>(&value_)) {
    return g->to_double();
  }
  const auto& iv = std::get<RationalInterval>(value_);
  return ((iv.lower + iv.upper) / Fraction(2)).to_double();
}

std::string Real::to_decimal(unsigned places) const {
  if (auto f = std::get_if<Fraction>(&value_)) {
    return f->to_decimal(places);
  }
  if (auto g = std::get_if<GoldenReal>(&value_)) {
    return g->to_decimal(places);
  }
  const auto& iv = std::get<RationalInterval>(value_);
  return ((iv.lower + iv.upper) / Fraction(2)).to_decimal(places);
}

std::string Real::to_string() const {
  if (auto f = std::get_if<Fraction>(&value_)) {
    return f->to_string();
  }
  if (auto g = std::get_if<GoldenReal>(&value_)) {
    return g->to_string();
  }
  return to_decimal(10);
}

Real Real::operator-() const {
  if (auto f = std::get_if<Fraction>(&value_)) {
    return Real(-*f);
  }
  if (auto g = std::get_if<GoldenReal>(&value_)) {
    return Real(-*g);
  }
  const auto& iv = std::get<RationalInterval>(value_);
  return Real(RationalInterval{-iv.upper, -iv.lower});
}

Real operator+(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) {
    return Real(a.to_golden() + b.to_golden());
  }
  RationalInterval x = as_interval_of(a.value_);
  RationalInterval y = as_interval_of(b.value_);
  return Real(RationalInterval{x.lower + y.lower, x.upper + y.upper});
}

Real operator-(const Real& a, const Real& b) { return a + (-b); }

Real operator*(const Real& a, const Real& b) {
  if (a.is_exact() && b.is_exact()) {
    return Real(a.to_golden() * b.to_golden());
  }
  RationalInterval x = as_interval_of(a.value_);
  RationalInterval y = as_interval_of(b.value_);
  std::array<Fraction, 4> p{x.lower * y.lower, x.lower * y.upper, x.upper * y.lower,
                            x.upper * y.upper};
  auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  return Real(RationalInterval{*lo, *hi});
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_exact() && b.to_golden().is_zero()) {
    throw InvalidArgument("division by zero");
  }
  return a * b.reciprocal();
}

namespace {

Real parse_term(std::string_view term, std::string_view whole) {
  auto symbol = [&](std::string_view name) -> std::optional<Real> {
    if (name == "phi") return Real::phi();
    if (name == "pi") return Real::pi();
    return std::nullopt;
  };
  if (term.empty()) {
    throw InvalidArgument("malformed expression '" + std::string(whole) + "'");
  }
  if (auto star = term.find('*'); star != std::string_view::npos) {
    auto sym = symbol(term.substr(star + 1));
    if (!sym) {
      throw InvalidArgument("unknown symbol in '" + std::string(whole) + "'");
    }
    return Real(Fraction::parse(term.substr(0, star))) * *sym;
  }
  if (auto sym = symbol(term)) {
    return *sym;
  }
  return Real(Fraction::parse(term));
}

}  // namespace

Real parse_real(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact.push_back(c);
  }
  if (compact.empty()) {
    throw InvalidArgument("empty expression");
  }
  Real total(0);
  std::size_t pos = 0;
  bool first = true;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (!first) {
      throw InvalidArgument("malformed expression '" + compact + "'");
    }
    std::size_t end = compact.find_first_of("+-", pos);
    // a sign directly after '*' or '/' belongs to the term
    while (end != std::string::npos && end > pos &&
           (compact[end - 1] == '*' || compact[end - 1] == '/')) {
      end = compact.find_first_of("+-", end + 1);
    }
    std::string_view term = std::string_view(compact).substr(
        pos, end == std::string::npos ? std::string::npos : end - pos);
    Real value = parse_term(term, compact);
    total = negative ? total - value : total + value;
    pos = end == std::string::npos ? compact.size() : end;
    first = false;
  }
  return total;
}

}  // namespace quasitone::nt

#include "quasitone/numbertheory/fraction.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "quasitone/errors.hpp"

namespace quasitone::nt {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw InvalidArgument("malformed number '" + std::string(whole) + "'");
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw InvalidArgument("malformed number '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidArgument("malformed number '" + std::string(whole) + "'");
    }
  }
  BigInt value(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace

Fraction::Fraction(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) {
    throw InvalidArgument("fraction with zero denominator");
  }
  normalize();
}

void Fraction::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction Fraction::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt n = parse_integer(text.substr(0, slash), text);
    BigInt d = parse_integer(text.substr(slash + 1), text);
    if (d.is_zero()) {
      throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    }
    return Fraction(std::move(n), std::move(d));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) {
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw InvalidArgument("malformed number '" + std::string(text) + "'");
    }
    if (!frac_part.empty() && (frac_part[0] == '-' || frac_part[0] == '+')) {
      throw InvalidArgument("malformed number '" + std::string(text) + "'");
    }
    BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    BigInt digits = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    BigInt scale = pow10(static_cast<unsigned>(frac_part.size()));
    BigInt n = whole * scale + digits;
    return Fraction(negative ? BigInt(-n) : n, scale);
  }
  return Fraction(parse_integer(text, text));
}

Fraction Fraction::reciprocal() const {
  if (num_.is_zero()) {
    throw InvalidArgument("reciprocal of zero");
  }
  return Fraction(den_, num_);
}

double Fraction::to_double() const {
  boost::multiprecision::cpp_rational r(num_, den_);
  return r.convert_to<double>();
}

std::string format_scaled_decimal(const BigInt& scaled, unsigned places) {
  bool negative = scaled.sign() < 0;
  std::string digits = (negative ? BigInt(-scaled) : scaled).str();
  if (digits.size() <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && scaled != 0) {
    out.push_back('-');
  }
  out.append(digits, 0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - places, places);
  }
  return out;
}

std::string Fraction::to_decimal(unsigned places) const {
  BigInt scale = pow10(places);
  BigInt magnitude = num_.sign() < 0 ? BigInt(-num_) : num_;
  // round half away from zero: floor(|x|·10^p + 1/2)
  BigInt scaled = (2 * magnitude * scale + den_) / (2 * den_);
  if (num_.sign() < 0) {
    scaled = -scaled;
  }
  return format_scaled_decimal(scaled, places);
}

std::string Fraction::to_string() const {
  return num_.str() + "/" + den_.str();
}

Fraction Fraction::operator-() const {
  Fraction r = *this;
  r.num_ = -r.num_;
  return r;
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Fraction& Fraction::operator*=(const Fraction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& rhs) {
  if (rhs.num_.is_zero()) {
    throw InvalidArgument("division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) {
    return a.num_.compare(b.num_) <=> 0;
  }
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

}  // namespace quasitone::nt

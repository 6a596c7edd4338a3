#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quasitone::nt {

using BigInt = boost::multiprecision::cpp_int;

// Floor division for a positive divisor.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

inline BigInt pow10(unsigned exponent) {
  return boost::multiprecision::pow(BigInt(10), exponent);
}

}  // namespace quasitone::nt

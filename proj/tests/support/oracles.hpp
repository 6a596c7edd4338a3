#pragma once

// Reference implementations used only by tests. They follow the definitions
// literally and share no code path with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quasitone::testing {

using Int = long long;
using Wide = __int128;

/// Sign of m + n·φ, decided with integers only: 2(m + nφ) = (2m + n) + n√5.
inline int zphi_sign(Wide m, Wide n) {
  Wide u = 2 * m + n;
  if (u >= 0 && n >= 0) return (u > 0 || n > 0) ? 1 : 0;
  if (u <= 0 && n <= 0) return -1;
  Wide lhs = u * u;
  Wide rhs = 5 * n * n;
  if (u > 0) return lhs > rhs ? 1 : -1;
  return lhs > rhs ? -1 : 1;
}

/// A target y described by how to order two distances. closer(c, d, a, b)
/// returns the sign of dist(c/d) − dist(a/b) for the chosen kind; `approx`
/// is a floating estimate used only to pick the candidate window.
struct Target {
  double approx;
  std::function<int(Int, Int, Int, Int)> second_kind;
  std::function<int(Int, Int, Int, Int)> first_kind;
};

inline Target rational_target(Int p, Int q) {
  // |d·p/q − c| ↔ |dp − cq|
  auto second = [p, q](Int c, Int d, Int a, Int b) {
    Wide lhs = d * p - c * q;
    Wide rhs = b * p - a * q;
    lhs = lhs < 0 ? -lhs : lhs;
    rhs = rhs < 0 ? -rhs : rhs;
    return lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  };
  // |p/q − c/d| ↔ |b(dp − cq)| vs |d(bp − aq)|
  auto first = [p, q](Int c, Int d, Int a, Int b) {
    Wide lhs = static_cast<Wide>(b) * (d * p - c * q);
    Wide rhs = static_cast<Wide>(d) * (b * p - a * q);
    lhs = lhs < 0 ? -lhs : lhs;
    rhs = rhs < 0 ? -rhs : rhs;
    return lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  };
  return {static_cast<double>(p) / static_cast<double>(q), second, first};
}

inline Target golden_target() {
  auto abs_diff_sign = [](Wide m1, Wide n1, Wide m2, Wide n2) {
    // sign(|m1 + n1φ| − |m2 + n2φ|)
    int s1 = zphi_sign(m1, n1);
    int s2 = zphi_sign(m2, n2);
    if (s1 < 0) { m1 = -m1; n1 = -n1; }
    if (s2 < 0) { m2 = -m2; n2 = -n2; }
    return zphi_sign(m1 - m2, n1 - n2);
  };
  auto second = [abs_diff_sign](Int c, Int d, Int a, Int b) {
    return abs_diff_sign(-c, d, -a, b);
  };
  auto first = [abs_diff_sign](Int c, Int d, Int a, Int b) {
    return abs_diff_sign(-static_cast<Wide>(b) * c, static_cast<Wide>(b) * d,
                         -static_cast<Wide>(d) * a, static_cast<Wide>(d) * b);
  };
  return {1.6180339887498948482, second, first};
}

/// π in long double; every decision must clear a safety margin or the oracle
/// refuses to answer.
inline Target pi_target() {
  constexpr long double kPi = 3.14159265358979323846264338327950288L;
  auto decide = [](long double diff) {
    if (std::fabs(diff) < 1e-14L) throw std::runtime_error("pi oracle: margin too small");
    return diff > 0 ? 1 : -1;
  };
  auto second = [decide](Int c, Int d, Int a, Int b) {
    return decide(std::fabs(d * kPi - c) - std::fabs(b * kPi - a));
  };
  auto first = [decide](Int c, Int d, Int a, Int b) {
    return decide(std::fabs(kPi - static_cast<long double>(c) / d) -
                  std::fabs(kPi - static_cast<long double>(a) / b));
  };
  return {static_cast<double>(kPi), second, first};
}

/// Every reduced a/b (b <= max_den) such that for all c/d ≠ a/b with
/// d <= b the distance of c/d strictly exceeds that of a/b. Only c near d·y
/// are examined; any other c is at least 1 away and cannot compete.
inline std::vector<std::pair<Int, Int>> brute_force_best(const Target& y, Int max_den,
                                                        bool first_kind) {
  const auto& closer = first_kind ? y.first_kind : y.second_kind;
  std::vector<std::pair<Int, Int>> out;
  for (Int b = 1; b <= max_den; ++b) {
    Int base = static_cast<Int>(std::floor(b * y.approx));
    for (Int a = base - 1; a <= base + 2; ++a) {
      if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
      bool best = true;
      for (Int d = 1; d <= b && best; ++d) {
        Int cbase = static_cast<Int>(std::floor(d * y.approx));
        for (Int c = cbase - 2; c <= cbase + 3 && best; ++c) {
          if (c == a && d == b) continue;
          if (static_cast<Wide>(c) * b == static_cast<Wide>(a) * d) continue;
          if (closer(c, d, a, b) <= 0) best = false;
        }
      }
      if (best) out.emplace_back(a, b);
    }
  }
  return out;
}

/// Integer relation search: some (y1, y2) ≠ 0 with |yi| <= bound and
/// y1·v1 + y2·v2 = 0, each value given as integer coordinates (r, g) of r + gφ
/// over a common denominator.
inline bool has_small_relation(std::pair<Int, Int> v1, std::pair<Int, Int> v2, Int bound) {
  for (Int y1 = -bound; y1 <= bound; ++y1) {
    for (Int y2 = -bound; y2 <= bound; ++y2) {
      if (y1 == 0 && y2 == 0) continue;
      if (static_cast<Wide>(y1) * v1.first + static_cast<Wide>(y2) * v2.first == 0 &&
          static_cast<Wide>(y1) * v1.second + static_cast<Wide>(y2) * v2.second == 0) {
        return true;
      }
    }
  }
  return false;
}

inline std::size_t naive_complexity(std::string_view word, std::size_t n) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i + n <= word.size(); ++i) seen.emplace(word.substr(i, n));
  return seen.size();
}

/// Smallest positive multiple of xs[0] divisible by every element.
inline std::uint64_t scan_lcm(const std::vector<std::uint64_t>& xs) {
  for (std::uint64_t m = xs[0];; m += xs[0]) {
    if (std::all_of(xs.begin(), xs.end(), [m](std::uint64_t x) { return m % x == 0; })) return m;
  }
}

/// Continued fraction of the rational N/D by long division.
inline std::vector<boost::multiprecision::cpp_int> long_division_cf(
    boost::multiprecision::cpp_int n, boost::multiprecision::cpp_int d, std::size_t terms) {
  std::vector<boost::multiprecision::cpp_int> out;
  while (out.size() < terms && d != 0) {
    boost::multiprecision::cpp_int q = n / d;
    out.push_back(q);
    boost::multiprecision::cpp_int r = n - q * d;
    n = d;
    d = r;
  }
  return out;
}

/// Partial quotients shared by both ends of a truncated decimal expansion
/// "I.FFFF" (value within one unit of the last digit).
inline std::vector<boost::multiprecision::cpp_int> decimal_cf(const std::string& decimal,
                                                               std::size_t terms) {
  auto dot = decimal.find('.');
  std::string digits = decimal.substr(0, dot) + decimal.substr(dot + 1);
  boost::multiprecision::cpp_int n(digits);
  boost::multiprecision::cpp_int scale = boost::multiprecision::pow(
      boost::multiprecision::cpp_int(10), static_cast<unsigned>(decimal.size() - dot - 1));
  auto lo = long_division_cf(n, scale, terms + 1);
  auto hi = long_division_cf(n + 1, scale, terms + 1);
  std::vector<boost::multiprecision::cpp_int> common;
  // the last shared quotient may still differ by truncation, so drop it
  for (std::size_t i = 0; i + 1 < std::min(lo.size(), hi.size()) && lo[i] == hi[i]; ++i) {
    common.push_back(lo[i]);
  }
  common.resize(std::min(common.size(), terms));
  return common;
}

inline constexpr const char* kPi50 =
    "3.14159265358979323846264338327950288419716939937510";

}  // namespace quasitone::testing

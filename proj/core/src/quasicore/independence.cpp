#include "quasitone/quasicore/independence.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "quasitone/errors.hpp"

namespace quasitone::quasi {

IndependenceResult rationally_independent(std::span<const GoldenReal> values) {
  if (values.empty()) {
    throw InvalidArgument("independence test needs at least one value");
  }
  for (const auto& v : values) {
    if (v.is_zero()) {
      throw InvalidArgument("independence test needs nonzero values");
    }
  }
  const std::size_t n = values.size();
  // 2 × n coordinate matrix, reduced to row echelon form over Q.
  std::array<std::vector<Fraction>, 2> rows;
  for (const auto& v : values) {
    rows[0].push_back(v.rational_part());
    rows[1].push_back(v.golden_part());
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < 2; ++col) {
    std::size_t pick = row;
    while (pick < 2 && rows[pick][col].is_zero()) ++pick;
    if (pick == 2) continue;
    std::swap(rows[row], rows[pick]);
    Fraction lead = rows[row][col];
    for (auto& entry : rows[row]) entry /= lead;
    for (std::size_t other = 0; other < 2; ++other) {
      if (other == row || rows[other][col].is_zero()) continue;
      Fraction factor = rows[other][col];
      for (std::size_t k = 0; k < n; ++k) rows[other][k] -= factor * rows[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  if (pivots.size() == n) {
    return {};
  }
  std::size_t free_col = 0;
  while (free_col < n &&
         std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) {
    ++free_col;
  }
  // Null vector: free column 1, other free columns 0, pivots solved.
  std::vector<Fraction> null(n, Fraction(0));
  null[free_col] = Fraction(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    null[pivots[r]] = -rows[r][free_col];
  }
  BigInt scale = 1;
  for (const auto& y : null) scale = boost::multiprecision::lcm(scale, y.denominator());
  std::vector<BigInt> witness;
  witness.reserve(n);
  BigInt g = 0;
  for (const auto& y : null) {
    witness.push_back(y.numerator() * (scale / y.denominator()));
    g = boost::multiprecision::gcd(g, witness.back());
  }
  bool flip = false;
  for (const auto& y : witness) {
    if (!y.is_zero()) {
      flip = y.sign() < 0;
      break;
    }
  }
  for (auto& y : witness) {
    y /= g;
    if (flip) y = -y;
  }
  return {false, std::move(witness)};
}

}  // namespace quasitone::quasi

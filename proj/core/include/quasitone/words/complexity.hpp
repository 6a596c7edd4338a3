#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace quasitone::words {

/// σ(n): number of distinct length-n factors (contiguous substrings).
/// Throws LengthExceeded when n exceeds the word length.
std::size_t complexity(std::string_view word, std::size_t n);

enum class MorseHedlundVerdict { PeriodicConsistent, AperiodicConsistent };

struct ComplexityRow {
  std::size_t n;
  std::size_t sigma;
  bool meets_aperiodic_bound;  // σ(n) >= n + 1
};

/// Finite-prefix Morse–Hedlund check: an aperiodic infinite word has
/// σ(n) >= n + 1 for all n, an eventually periodic one has bounded σ. Only a
/// prefix is observed, so the verdict is evidence, not proof.
struct MorseHedlundReport {
  std::vector<ComplexityRow> rows;
  std::optional<std::size_t> first_flagged;  // first n with σ(n) <= n
  MorseHedlundVerdict verdict;

  static constexpr std::string_view kCaveat =
      "finite-prefix heuristic: only the observed prefix was examined";
};

/// Requires 2·max_n <= length(word) so every window length is well sampled.
MorseHedlundReport classify_morse_hedlund(std::string_view word, std::size_t max_n);

std::string_view to_string(MorseHedlundVerdict verdict);

}  // namespace quasitone::words

#include "quasitone/words/complexity.hpp"

#include <string>
#include <unordered_set>

#include "quasitone/errors.hpp"

namespace quasitone::words {

std::size_t complexity(std::string_view word, std::size_t n) {
  if (n == 0) {
    throw InvalidArgument("factor length must be >= 1");
  }
  if (n > word.size()) {
    throw LengthExceeded("factor length " + std::to_string(n) + " exceeds word length " +
                         std::to_string(word.size()));
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(word.size() - n + 1);
  for (std::size_t i = 0; i + n <= word.size(); ++i) {
    seen.insert(word.substr(i, n));
  }
  return seen.size();
}

MorseHedlundReport classify_morse_hedlund(std::string_view word, std::size_t max_n) {
  if (max_n == 0 || 2 * max_n > word.size()) {
    throw InvalidArgument("max_n must satisfy 1 <= max_n <= length - max_n (length " +
                          std::to_string(word.size()) + ")");
  }
  MorseHedlundReport report{{}, std::nullopt, MorseHedlundVerdict::AperiodicConsistent};
  report.rows.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t sigma = complexity(word, n);
    report.rows.push_back({n, sigma, sigma >= n + 1});
    if (sigma <= n && !report.first_flagged) {
      report.first_flagged = n;
      report.verdict = MorseHedlundVerdict::PeriodicConsistent;
    }
  }
  return report;
}

std::string_view to_string(MorseHedlundVerdict verdict) {
  return verdict == MorseHedlundVerdict::PeriodicConsistent ? "periodic-consistent"
                                                            : "aperiodic-consistent";
}

}  // namespace quasitone::words

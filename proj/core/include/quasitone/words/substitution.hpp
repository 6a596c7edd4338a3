#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace quasitone::words {

/// Finite word over single-character symbols, with a note on how it was made.
struct Word {
  std::string symbols;
  std::string provenance;

  std::size_t size() const noexcept { return symbols.size(); }
};

/// Parallel rewriting rule of a Lindenmayer system: every symbol of the
/// alphabet maps to a non-empty replacement over the same alphabet.
class SubstitutionRule {
 public:
  static constexpr std::size_t kMinAlphabet = 2;
  static constexpr std::size_t kMaxAlphabet = 16;

  /// Validates the alphabet size and that every replacement stays inside it.
  explicit SubstitutionRule(std::map<char, std::string> rules);

  /// Parses "A:AB,B:A".
  static SubstitutionRule parse(std::string_view text);
  static SubstitutionRule fibonacci() { return SubstitutionRule({{'0', "01"}, {'1', "0"}}); }

  const std::string& alphabet() const noexcept { return alphabet_; }
  bool contains(char symbol) const noexcept;
  const std::string& image(char symbol) const;
  std::string to_string() const;

 private:
  std::map<char, std::string> rules_;
  std::string alphabet_;
};

inline constexpr std::size_t kDefaultMaxLength = 1'000'000;

/// Applies `rule` to every symbol of `axiom`, `iterations` times. Growth past
/// `max_length` keeps only the prefix; the provenance records the cut.
Word expand(const SubstitutionRule& rule, std::string_view axiom, std::size_t iterations,
            std::size_t max_length = kDefaultMaxLength);

/// First `length` symbols of the Fibonacci word, built by concatenation
/// S(n+2) = S(n+1) S(n) from S0 = "0", S1 = "01".
Word fibonacci_word(std::size_t length);

}  // namespace quasitone::words

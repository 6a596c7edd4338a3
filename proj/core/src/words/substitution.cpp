#include "quasitone/words/substitution.hpp"

#include <string>

#include "quasitone/errors.hpp"

namespace quasitone::words {

SubstitutionRule::SubstitutionRule(std::map<char, std::string> rules) : rules_(std::move(rules)) {
  if (rules_.size() < kMinAlphabet || rules_.size() > kMaxAlphabet) {
    throw InvalidArgument("alphabet must have 2 to 16 symbols, got " +
                          std::to_string(rules_.size()));
  }
  for (const auto& [symbol, replacement] : rules_) {
    alphabet_.push_back(symbol);
  }
  for (const auto& [symbol, replacement] : rules_) {
    if (replacement.empty()) {
      throw InvalidArgument(std::string("empty replacement for symbol '") + symbol + "'");
    }
    for (char c : replacement) {
      if (!contains(c)) {
        throw UnknownSymbol(std::string("replacement for '") + symbol + "' uses '" + c +
                            "', which is not in the alphabet");
      }
    }
  }
}

SubstitutionRule SubstitutionRule::parse(std::string_view text) {
  std::map<char, std::string> rules;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    // "X:replacement" with a single-character symbol
    if (item.size() < 3 || item[1] != ':') {
      throw InvalidArgument("malformed rule '" + std::string(item) + "' (expected X:replacement)");
    }
    if (!rules.emplace(item[0], std::string(item.substr(2))).second) {
      throw InvalidArgument(std::string("duplicate rule for symbol '") + item[0] + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return SubstitutionRule(std::move(rules));
}

bool SubstitutionRule::contains(char symbol) const noexcept {
  return rules_.find(symbol) != rules_.end();
}

const std::string& SubstitutionRule::image(char symbol) const {
  auto it = rules_.find(symbol);
  if (it == rules_.end()) {
    throw UnknownSymbol(std::string("symbol '") + symbol + "' is not in the alphabet");
  }
  return it->second;
}

std::string SubstitutionRule::to_string() const {
  std::string out;
  for (const auto& [symbol, replacement] : rules_) {
    if (!out.empty()) out += ',';
    out += symbol;
    out += ':';
    out += replacement;
  }
  return out;
}

Word expand(const SubstitutionRule& rule, std::string_view axiom, std::size_t iterations,
            std::size_t max_length) {
  if (axiom.empty()) {
    throw InvalidArgument("axiom must be non-empty");
  }
  if (max_length == 0) {
    throw InvalidArgument("max_length must be >= 1");
  }
  for (char c : axiom) {
    if (!rule.contains(c)) {
      throw UnknownSymbol(std::string("axiom symbol '") + c + "' is not in the alphabet");
    }
  }
  std::string current(axiom.substr(0, max_length));
  bool truncated = axiom.size() > max_length;
  std::size_t done = 0;
  std::string next;
  for (; done < iterations; ++done) {
    next.clear();
    // Expanding a prefix yields a prefix of the full expansion, since every
    // replacement is non-empty.
    for (std::size_t i = 0; i < current.size(); ++i) {
      const std::string& img = rule.image(current[i]);
      std::size_t room = max_length - next.size();
      if (img.size() > room || (img.size() == room && i + 1 < current.size())) {
        next.append(img, 0, room);
        truncated = true;
        break;
      }
      next += img;
    }
    if (next == current) {
      // fixed point of the truncated iteration; further steps change nothing
      done = iterations;
      break;
    }
    current.swap(next);
  }
  Word word;
  word.symbols = std::move(current);
  word.provenance = "expand " + rule.to_string() + " axiom=" + std::string(axiom) +
                    " iterations=" + std::to_string(iterations);
  if (truncated) {
    word.provenance += " truncated=" + std::to_string(max_length);
  }
  return word;
}

Word fibonacci_word(std::size_t length) {
  if (length == 0) {
    throw InvalidArgument("length must be >= 1");
  }
  std::string older = "0";
  std::string newer = "01";
  if (length == 1) {
    return Word{older, "fibonacci recurrence length=1"};
  }
  while (newer.size() < length) {
    std::string next = newer + older;
    older = std::move(newer);
    newer = std::move(next);
  }
  newer.resize(length);
  return Word{std::move(newer), "fibonacci recurrence length=" + std::to_string(length)};
}

}  // namespace quasitone::words

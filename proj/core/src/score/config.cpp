#include "quasitone/score/config.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "quasitone/errors.hpp"
#include "quasitone/numbertheory/real.hpp"
#include "quasitone/score/pitch.hpp"

namespace quasitone::score {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

template <typename Fn>
auto at_line(std::size_t line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  } catch (const InexactValue& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

GoldenReal parse_golden(std::string_view text) {
  return nt::parse_real(text).to_golden();
}

Score parse_score(std::string_view text) {
  Score score;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto words = split_words(line);
    if (words.empty()) continue;

    const std::string& keyword = words[0];
    if (keyword == "horizon") {
      if (words.size() != 2) throw ParseError(line_no, "expected: horizon <seconds>");
      Fraction h = at_line(line_no, [&] { return Fraction::parse(words[1]); });
      if (h.sign() <= 0) throw ParseError(line_no, "horizon must be positive");
      score.horizon = h;
    } else if (keyword == "part") {
      if (words.size() != 4 || words[2] != "period") {
        throw ParseError(line_no, "expected: part <name> period <expr>");
      }
      GoldenReal period = at_line(line_no, [&] { return parse_golden(words[3]); });
      if (period.sign() <= 0) {
        throw InvalidPeriod("line " + std::to_string(line_no) + ": period " + words[3] +
                            " must be positive");
      }
      score.parts.push_back(Part{words[1], std::move(period), {}});
    } else if (keyword == "note") {
      if (words.size() != 8 || words[2] != "at" || words[4] != "vel" || words[6] != "dur") {
        throw ParseError(line_no,
                         "expected: note <pitch> at <fraction> vel <0..1> dur <fraction>");
      }
      if (score.parts.empty()) throw ParseError(line_no, "note before any part");
      NoteEvent note;
      try {
        note.pitch = parse_pitch(words[1]);
      } catch (const UnknownPitchName& e) {
        throw UnknownPitchName("line " + std::to_string(line_no) + ": " + e.what());
      }
      note.onset_in_measure = at_line(line_no, [&] { return Fraction::parse(words[3]); });
      note.velocity = at_line(line_no, [&] { return Fraction::parse(words[5]).to_double(); });
      note.duration = at_line(line_no, [&] { return Fraction::parse(words[7]); });
      at_line(line_no, [&] { note.validate(); });
      score.parts.back().events.push_back(std::move(note));
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (score.parts.empty()) {
    throw ParseError(line_no, "score defines no parts");
  }
  for (const auto& part : score.parts) {
    if (part.events.empty()) {
      throw ParseError(line_no, "part '" + part.name + "' has no notes");
    }
  }
  score.check_independence();
  return score;
}

}  // namespace quasitone::score

#include "quasitone/score/pitch.hpp"

#include <array>
#include <charconv>

#include "quasitone/errors.hpp"

namespace quasitone::score {

namespace {

bool parse_int(std::string_view text, int& value) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

[[noreturn]] void unknown(std::string_view text) {
  throw UnknownPitchName("unknown pitch '" + std::string(text) + "'");
}

}  // namespace

int parse_pitch(std::string_view text) {
  int midi = 0;
  if (parse_int(text, midi)) {
    if (midi < 0 || midi > 127) unknown(text);
    return midi;
  }
  if (text.size() < 2) unknown(text);
  static constexpr std::array<int, 7> kSemitone{9, 11, 0, 2, 4, 5, 7};  // A..G
  char letter = text[0];
  if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
  if (letter < 'A' || letter > 'G') unknown(text);
  int semitone = kSemitone[letter - 'A'];
  std::size_t pos = 1;
  while (pos < text.size() && (text[pos] == '#' || text[pos] == 'b')) {
    semitone += text[pos] == '#' ? 1 : -1;
    ++pos;
  }
  int octave = 0;
  if (!parse_int(text.substr(pos), octave)) unknown(text);
  midi = 12 * (octave + 1) + semitone;
  if (midi < 0 || midi > 127) unknown(text);
  return midi;
}

std::string pitch_name(int midi) {
  static constexpr std::array<const char*, 12> kNames{"C",  "C#", "D",  "D#", "E",  "F",
                                                      "F#", "G",  "G#", "A",  "A#", "B"};
  int octave = midi / 12 - 1;
  return std::string(kNames[static_cast<std::size_t>(midi % 12)]) + std::to_string(octave);
}

}  // namespace quasitone::score

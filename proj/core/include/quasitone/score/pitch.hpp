#pragma once

#include <string>
#include <string_view>

namespace quasitone::score {

/// Accepts scientific pitch notation ("A4", "C#5", "Bb3", "C-1") or a raw
/// MIDI number ("69"). Throws UnknownPitchName.
int parse_pitch(std::string_view text);

/// Scientific pitch name with sharps, e.g. 61 -> "C#4".
std::string pitch_name(int midi);

}  // namespace quasitone::score

#pragma once

#include <string_view>

#include "quasitone/quasicore/golden_real.hpp"
#include "quasitone/score/score.hpp"

namespace quasitone::score {

/// Parses the line-oriented score format:
///
///   # comment
///   horizon 60
///   part melody period 1
///   note A4 at 0 vel 0.8 dur 1
///   part bells period 1+1/2*phi
///   note C5 at 1/2 vel 0.8 dur 1
///
/// Periods are an integer, a/b, `phi`, or `a+b*phi` with rational a and b.
/// The resulting score has its independence checked; dependent periods only
/// add a warning. Throws ParseError, InvalidPeriod, UnknownPitchName.
Score parse_score(std::string_view text);

/// Parses a period expression in Q(φ).
GoldenReal parse_golden(std::string_view text);

}  // namespace quasitone::score

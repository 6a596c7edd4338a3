#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quasitone {

// Base class for every domain error raised by the library. name() is the
// stable identifier printed by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string_view name, const std::string& message)
      : std::runtime_error(message), name_(name) {}

  std::string_view name() const noexcept { return name_; }

 private:
  std::string_view name_;
};

#define QUASITONE_DEFINE_ERROR(Type)                                  \
  class Type : public Error {                                         \
   public:                                                            \
    explicit Type(const std::string& message) : Error(#Type, message) {} \
  }

QUASITONE_DEFINE_ERROR(InvalidArgument);
QUASITONE_DEFINE_ERROR(PrecisionExhausted);
QUASITONE_DEFINE_ERROR(InexactValue);
QUASITONE_DEFINE_ERROR(UnknownSymbol);
QUASITONE_DEFINE_ERROR(LengthExceeded);
QUASITONE_DEFINE_ERROR(DimensionMismatch);
QUASITONE_DEFINE_ERROR(ZeroPeriod);
QUASITONE_DEFINE_ERROR(EmptyScore);
QUASITONE_DEFINE_ERROR(InvalidPeriod);
QUASITONE_DEFINE_ERROR(UnknownPitchName);
QUASITONE_DEFINE_ERROR(OutOfRange);
QUASITONE_DEFINE_ERROR(BufferTooLarge);
QUASITONE_DEFINE_ERROR(ClipError);
QUASITONE_DEFINE_ERROR(IoFailure);

#undef QUASITONE_DEFINE_ERROR

// Malformed score configuration; line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("ParseError", "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace quasitone

#include "shabda/error.hpp"

#include <cstdio>

namespace shabda {

std::string format_code_point(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

UnmappableCharacter::UnmappableCharacter(std::size_t offset, char32_t code_point)
    : Error("unmappable character " + format_code_point(code_point) +
            " at offset " + std::to_string(offset)),
      offset_(offset),
      code_point_(code_point) {}

ScriptViolation::ScriptViolation(std::size_t line, std::size_t offset,
                                 char32_t code_point)
    : Error("line " + std::to_string(line) + ": " +
            format_code_point(code_point) + " at offset " +
            std::to_string(offset) + " is not valid for the declared script"),
      line_(line),
      offset_(offset),
      code_point_(code_point) {}

ConversionError::ConversionError(std::size_t instance,
                                 const UnmappableCharacter& cause)
    : Error("instance " + std::to_string(instance) + ": " + cause.what()),
      instance_(instance),
      offset_(cause.offset()),
      code_point_(cause.code_point()) {}

}  // namespace shabda

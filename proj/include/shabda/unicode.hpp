#pragma once

#include <string>
#include <string_view>

namespace shabda {

// UTF-8 <-> code point conversion. Invalid UTF-8 raises InvalidInput.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);

// Canonical composition (NFC).
std::u32string nfc(std::u32string_view text);
std::string nfc(std::string_view utf8);

inline bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v' || c == 0x00A0;
}

// Symbols the toolkit reserves for segment encoding and augmented input.
inline bool is_marker(char32_t c) {
  return c == U'+' || c == U'&' || c == U'$' || c == U'<' || c == U'>';
}

// Candrabindu-adjacent vedic accents and joiners pass through every
// conversion untouched.
inline bool is_passthrough(char32_t c) {
  return (c >= 0x0951 && c <= 0x0954) || (c >= 0x1CD0 && c <= 0x1CFF) ||
         (c >= 0xA8E0 && c <= 0xA8F1) || c == 0x200C || c == 0x200D;
}

}  // namespace shabda

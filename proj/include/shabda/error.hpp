#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shabda {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A code point with no mapping in the transliteration table.
/// `offset` counts code points in the NFC-normalized input.
class UnmappableCharacter : public Error {
 public:
  UnmappableCharacter(std::size_t offset, char32_t code_point);

  std::size_t offset() const noexcept { return offset_; }
  char32_t code_point() const noexcept { return code_point_; }

 private:
  std::size_t offset_;
  char32_t code_point_;
};

class WrongScript : public Error {
 public:
  using Error::Error;
};

class DuplicateRule : public Error {
 public:
  DuplicateRule(std::size_t line, const std::string& what)
      : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptySegment : public Error {
 public:
  using Error::Error;
};

class DecodeEmpty : public Error {
 public:
  using Error::Error;
};

class EmptyReference : public Error {
 public:
  using Error::Error;
};

class UnalignableGold : public Error {
 public:
  using Error::Error;
};

class ScriptViolation : public Error {
 public:
  ScriptViolation(std::size_t line, std::size_t offset, char32_t code_point);
  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }
  char32_t code_point() const noexcept { return code_point_; }

 private:
  std::size_t line_;
  std::size_t offset_;
  char32_t code_point_;
};

/// Transliteration failure inside a corpus, tagged with the instance index.
class ConversionError : public Error {
 public:
  ConversionError(std::size_t instance, const UnmappableCharacter& cause);
  std::size_t instance() const noexcept { return instance_; }
  std::size_t offset() const noexcept { return offset_; }
  char32_t code_point() const noexcept { return code_point_; }

 private:
  std::size_t instance_;
  std::size_t offset_;
  char32_t code_point_;
};

std::string format_code_point(char32_t cp);

}  // namespace shabda

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qord {

/// Expression text failed to lex or parse. `position` is the 1-based
/// character offset of the offending token in the source string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An exact identity that must hold by construction failed. This signals a
/// bug in the engine (or a verification mismatch), never bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& message) : std::logic_error(message) {}
};

}  // namespace qord

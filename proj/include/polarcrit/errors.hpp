#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarcrit {

enum class ErrorCode {
  NotSeparating,
  NotRadical,
  NotFinite,
  Fail,
  Degenerate,
  DimensionMismatch,
  RingMismatch,
  EmptyFiber,
  Unstable,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Failure of an algebraic routine with a machine-readable cause.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax or content error in textual input. `position` is a byte offset
/// into the parsed text (or a line number for problem files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polarcrit

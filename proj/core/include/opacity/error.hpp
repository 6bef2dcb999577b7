#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opacity {

enum class ErrorKind {
  SyntaxError,
  BadRadix,
  NoStates,
  DuplicateState,
  UnknownState,
  MissingTransition,
  DuplicateTransition,
  DigitOutOfRange,
  MissingOutput,
  DuplicateOutput,
  RadixMismatch,
  InstanceTooLarge,
  UnknownCorpusName,
  NoRecurrence,
  ExponentOverflow,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `line()` is 1-based and 0 when the
/// error is not tied to a location in an .aut file.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
};

}  // namespace opacity

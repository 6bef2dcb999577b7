#include "opacity/error.hpp"

namespace opacity {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadRadix: return "BadRadix";
    case ErrorKind::NoStates: return "NoStates";
    case ErrorKind::DuplicateState: return "DuplicateState";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::MissingTransition: return "MissingTransition";
    case ErrorKind::DuplicateTransition: return "DuplicateTransition";
    case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::MissingOutput: return "MissingOutput";
    case ErrorKind::DuplicateOutput: return "DuplicateOutput";
    case ErrorKind::RadixMismatch: return "RadixMismatch";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::UnknownCorpusName: return "UnknownCorpusName";
    case ErrorKind::NoRecurrence: return "NoRecurrence";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message,
                           std::size_t line) {
  std::string out(to_string(kind));
  if (line != 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(format_message(kind, message, line)),
      kind_(kind),
      line_(line) {}

}  // namespace opacity

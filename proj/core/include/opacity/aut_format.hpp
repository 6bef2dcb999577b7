#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "opacity/automaton.hpp"

// The .aut text format. One directive per line, whitespace-separated tokens,
// '#' starts a comment:
//
//   k 2
//   states A B
//   initial A
//   output A 0          (for every state, or for none)
//   output B 1
//   edge A 0 A          (exactly one per state and digit)
//   edge A 1 B
//   edge B 0 B
//   edge B 1 A

namespace opacity {

/// Reads the directives without checking them against each other. Throws
/// SyntaxError with the offending line.
RawDescription parse_description(std::string_view text);

/// parse_description followed by validate.
Validated parse_with_warnings(std::string_view text);
Dfao parse(std::string_view text);

/// Canonical text: k, states, initial, every output, then every edge in
/// state-major, digit-minor order.
std::string serialize(const Dfao& d);

/// Throws Io when the file cannot be read.
Validated read_aut_file(const std::filesystem::path& path);
void write_aut_file(const std::filesystem::path& path, const Dfao& d);

}  // namespace opacity

#include "opacity/aut_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "opacity/error.hpp"

namespace opacity {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string token; in >> token;) tokens.push_back(std::move(token));
  return tokens;
}

template <typename Int>
Int parse_integer(const std::string& token, std::size_t line, const char* what) {
  Int value{};
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::SyntaxError,
                std::string("expected ") + what + ", got '" + token + "'", line);
  }
  return value;
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t arity,
                  std::size_t line) {
  if (tokens.size() != arity) {
    throw Error(ErrorKind::SyntaxError,
                "'" + tokens[0] + "' takes " + std::to_string(arity - 1) + " argument(s)",
                line);
  }
}

void expect_once(std::size_t seen_line, const std::string& directive, std::size_t line) {
  if (seen_line != 0) {
    throw Error(ErrorKind::SyntaxError,
                "'" + directive + "' repeated (first on line " +
                    std::to_string(seen_line) + ")",
                line);
  }
}

}  // namespace

RawDescription parse_description(std::string_view text) {
  RawDescription raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& directive = tokens[0];
    if (directive == "k") {
      expect_arity(tokens, 2, line_no);
      expect_once(raw.radix_line, directive, line_no);
      raw.radix = parse_integer<std::int64_t>(tokens[1], line_no, "an integer radix");
      raw.radix_line = line_no;
    } else if (directive == "states") {
      if (tokens.size() < 2) {
        throw Error(ErrorKind::NoStates, "'states' lists no state", line_no);
      }
      expect_once(raw.states_line, directive, line_no);
      raw.states.assign(tokens.begin() + 1, tokens.end());
      raw.states_line = line_no;
    } else if (directive == "initial") {
      expect_arity(tokens, 2, line_no);
      expect_once(raw.initial_line, directive, line_no);
      raw.initial = tokens[1];
      raw.initial_line = line_no;
    } else if (directive == "output") {
      expect_arity(tokens, 3, line_no);
      raw.outputs.push_back({tokens[1], tokens[2], line_no});
    } else if (directive == "edge") {
      expect_arity(tokens, 4, line_no);
      raw.edges.push_back(
          {tokens[1], parse_integer<std::uint64_t>(tokens[2], line_no, "a digit"),
           tokens[3], line_no});
    } else {
      throw Error(ErrorKind::SyntaxError, "unknown directive '" + directive + "'",
                  line_no);
    }
  }
  if (raw.radix_line == 0) throw Error(ErrorKind::SyntaxError, "missing 'k' directive");
  if (raw.states_line == 0) {
    throw Error(ErrorKind::SyntaxError, "missing 'states' directive");
  }
  if (raw.initial_line == 0) {
    throw Error(ErrorKind::SyntaxError, "missing 'initial' directive");
  }
  return raw;
}

Validated parse_with_warnings(std::string_view text) {
  return validate(parse_description(text));
}

Dfao parse(std::string_view text) { return parse_with_warnings(text).dfao; }

std::string serialize(const Dfao& d) {
  const Automaton& a = d.automaton();
  std::string out = "k " + std::to_string(a.radix()) + "\nstates";
  for (const auto& name : a.state_names()) out += " " + name;
  out += "\ninitial " + a.name(a.initial()) + "\n";
  for (StateIndex s = 0; s < a.state_count(); ++s) {
    out += "output " + a.name(s) + " " + d.output(s) + "\n";
  }
  for (StateIndex s = 0; s < a.state_count(); ++s) {
    for (Digit dg = 0; dg < a.radix(); ++dg) {
      out += "edge " + a.name(s) + " " + std::to_string(dg) + " " +
             a.name(a.next(s, dg)) + "\n";
    }
  }
  return out;
}

Validated read_aut_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_with_warnings(buffer.str());
}

void write_aut_file(const std::filesystem::path& path, const Dfao& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << serialize(d);
  if (!out) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

}  // namespace opacity

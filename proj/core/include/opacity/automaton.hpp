#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace opacity {

using StateIndex = std::uint32_t;
using Digit = std::uint32_t;
/// A finite input word over {0, ..., k-1}.
using Word = std::vector<Digit>;

inline constexpr Digit kMaxRadix = 1u << 16;

/// A complete deterministic k-automaton (S, i0, {0..k-1}, t) without
/// terminal states. Instances are immutable; the constructor checks that the
/// table is total and in range. Accessibility is established by validate().
class Automaton {
 public:
  /// `table[s * radix + d]` is t(s, d).
  Automaton(Digit radix, std::vector<std::string> state_names,
            StateIndex initial, std::vector<StateIndex> table);

  Digit radix() const noexcept { return radix_; }
  std::size_t state_count() const noexcept { return names_.size(); }
  StateIndex initial() const noexcept { return initial_; }
  const std::vector<std::string>& state_names() const noexcept { return names_; }
  const std::string& name(StateIndex s) const { return names_.at(s); }
  const std::vector<StateIndex>& table() const noexcept { return table_; }

  /// Single transition t(s, d). Unchecked beyond debug assertions.
  StateIndex next(StateIndex s, Digit d) const noexcept {
    return table_[static_cast<std::size_t>(s) * radix_ + d];
  }

  /// Index of the state with the given name, or state_count() if absent.
  StateIndex find(const std::string& name) const noexcept;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  Digit radix_;
  std::vector<std::string> names_;
  StateIndex initial_;
  std::vector<StateIndex> table_;
};

/// A k-automaton with an output token on every state.
class Dfao {
 public:
  Dfao(Automaton automaton, std::vector<std::string> outputs);

  const Automaton& automaton() const noexcept { return automaton_; }
  const std::vector<std::string>& outputs() const noexcept { return outputs_; }
  const std::string& output(StateIndex s) const { return outputs_.at(s); }

  Digit radix() const noexcept { return automaton_.radix(); }
  std::size_t state_count() const noexcept { return automaton_.state_count(); }

  friend bool operator==(const Dfao&, const Dfao&) = default;

 private:
  Automaton automaton_;
  std::vector<std::string> outputs_;
};

/// Uses state names as outputs, i.e. the sequence generated by the bare
/// automaton.
Dfao with_identity_output(Automaton automaton);

struct Edge {
  StateIndex source;
  Digit digit;
  StateIndex target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The path of a word from the initial state: vertices s0 = i0, ..., sm and
/// edges (s_j, word[j], s_{j+1}).
struct PathRun {
  Word word;
  std::vector<StateIndex> vertices;
  std::vector<Edge> edges;
};

// -- Parsed descriptions and validation -------------------------------------

struct RawEdge {
  std::string source;
  std::uint64_t digit = 0;
  std::string target;
  std::size_t line = 0;
};

struct RawOutput {
  std::string state;
  std::string token;
  std::size_t line = 0;
};

/// An automaton description as read from a file, before any checking. Line
/// numbers are 0 when the description did not come from a file.
struct RawDescription {
  std::int64_t radix = 0;
  std::vector<std::string> states;
  std::string initial;
  std::vector<RawOutput> outputs;
  std::vector<RawEdge> edges;
  std::size_t radix_line = 0;
  std::size_t states_line = 0;
  std::size_t initial_line = 0;
};

struct Validated {
  Dfao dfao;
  /// Names of states removed because the initial state cannot reach them, in
  /// input order.
  std::vector<std::string> pruned_states;
};

/// Checks a raw description and prunes inaccessible states. When no outputs
/// are given every state outputs its own name.
Validated validate(const RawDescription& raw);

/// Restricts to the states reachable from the initial state, keeping their
/// relative order.
Validated prune_inaccessible(const Dfao& dfao);

// -- Running ---------------------------------------------------------------

/// Extended transition t(s, word). Throws DigitOutOfRange.
StateIndex step(const Automaton& a, StateIndex s, std::span<const Digit> word);

PathRun run_path(const Automaton& a, std::span<const Digit> word);

/// Breadth-first distances (in edges) from `from`; unreachable states get
/// kUnreachable.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::size_t> bfs_distances(const Automaton& a, StateIndex from);

/// True iff the transition graph is strongly connected.
bool is_strictly_accessible(const Automaton& a);

/// Most-significant-first base-k digits of n; empty for n = 0.
Word digits_msb(std::uint64_t n, Digit k);

/// u(0), ..., u(n_terms - 1) with u(n) = o(t(i0, digits_msb(n, k))).
std::vector<std::string> generate(const Dfao& d, std::size_t n_terms);

/// Output read off after the whole word: o(t(i0, word)).
const std::string& output_after(const Dfao& d, std::span<const Digit> word);

/// Adds a fresh initial state with a 0-loop when t(i0, 0) != i0, then prunes
/// what became inaccessible. Identity if the 0-loop is already there.
Dfao normalize_zero(const Dfao& d);

/// Decides whether the two DFAOs emit the same output on every finite word,
/// by exploring reachable state pairs of the product. Throws RadixMismatch.
bool are_equivalent(const Dfao& lhs, const Dfao& rhs);

/// Renumbers states in breadth-first discovery order from the initial state
/// (digits explored in increasing order) and renames them A, B, ..., Z, AA,
/// AB, .... Two accessible DFAOs are isomorphic iff their canonical forms
/// compare equal.
Dfao canonical_form(const Dfao& d);

/// Breadth-first discovery order used by canonical_form: order[j] is the
/// source index of the j-th discovered state.
std::vector<StateIndex> bfs_order(const Automaton& a);

/// 0 -> "A", 25 -> "Z", 26 -> "AA", ...
std::string letter_name(std::size_t index);

/// Digits concatenated for k <= 10, dot separated otherwise.
std::string format_word(std::span<const Digit> word, Digit k);

}  // namespace opacity

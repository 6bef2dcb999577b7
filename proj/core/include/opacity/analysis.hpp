#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "opacity/automaton.hpp"
#include "opacity/dyadic.hpp"

namespace opacity {

/// Opacity over the digit alphabet: transparent (0), or 1/2^(l-1) where
/// l >= 2 is the length of the shortest inhomogeneous path from i0.
class Opacity {
 public:
  static Opacity transparent() { return Opacity(); }
  /// Requires shortest_path_length >= 2.
  static Opacity from_path_length(std::size_t shortest_path_length);

  bool is_transparent() const noexcept { return !length_.has_value(); }
  bool is_opaque() const noexcept { return length_ == 2; }
  std::optional<std::size_t> path_length() const noexcept { return length_; }

  DyadicDistance value() const;
  /// The value divided by the maximal opacity 1/2.
  DyadicDistance complexity() const;

  friend bool operator==(const Opacity&, const Opacity&) = default;

 private:
  Opacity() = default;
  explicit Opacity(std::size_t length) : length_(length) {}

  std::optional<std::size_t> length_;
};

/// Maximal opacity over every k: the opacity of the one-state automaton.
DyadicDistance max_opacity();

/// A shortest inhomogeneous word. The path of `word` enters `collide_state`
/// through edge `position_a` and again through the last edge `position_b`
/// with a different digit.
struct PathWitness {
  Word word;
  StateIndex collide_state = 0;
  std::size_t position_a = 0;
  std::size_t position_b = 0;

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Verdict on the in-edges of a state over the whole graph. `type` is empty
/// for an inhomogeneous state and for a state with no in-edges at all.
struct StateVerdict {
  bool homogeneous = true;
  std::optional<Digit> type;

  friend bool operator==(const StateVerdict&, const StateVerdict&) = default;
};

enum class Classification { Transparent, Opaque, Intermediate };

std::string_view to_string(Classification c) noexcept;

struct AnalysisReport {
  /// The intrinsic automaton, which every field below describes except
  /// input_states.
  Dfao intrinsic;
  Digit k = 0;
  /// States of the analyzed input after pruning.
  std::size_t input_states = 0;
  std::size_t states_count = 0;
  Opacity opacity = Opacity::transparent();
  DyadicDistance complexity;
  Classification classification = Classification::Transparent;
  std::optional<PathWitness> witness;
  std::vector<StateVerdict> state_homogeneity;
  bool strictly_accessible = false;
};

std::vector<StateVerdict> state_homogeneity(const Automaton& a);

bool is_homogeneous_automaton(const Automaton& a);

/// Fewest edges of a path from i0 whose last edge has digit `sigma` and ends
/// at `s`.
std::optional<std::size_t> entry_distance(const Automaton& a, StateIndex s, Digit sigma);

/// Fewest edges (at least one) of a cycle from `s` back to `s` whose last edge
/// has digit `sigma`.
std::optional<std::size_t> return_distance(const Automaton& a, StateIndex s, Digit sigma);

/// Shortest inhomogeneous word from i0, lexicographically smallest among the
/// shortest; empty when every path is homogeneous.
std::optional<PathWitness> shortest_inhomogeneous_path(const Automaton& a);

Opacity compute_opacity(const Automaton& a);

/// Two-digit test: some sigma1 != sigma2 with t(i0, sigma1) = t(i0, sigma1 sigma2).
bool is_opaque_quick(const Automaton& a);

/// Largest h <= |word| such that the first h edges of the path of `word`
/// form a homogeneous path. Throws DigitOutOfRange.
std::size_t longest_homogeneous_prefix(const Automaton& a, std::span<const Digit> word);

/// Opacity report for the sequence generated by `d`, computed on its
/// intrinsic automaton.
AnalysisReport analyze_sequence(const Dfao& d);

}  // namespace opacity

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "opacity/automaton.hpp"
#include "opacity/dyadic.hpp"

// Brute-force opacity straight from the definition: for each input word take
// the best of all k^|S| relabelings of the states by digits, then take the
// worst word. Exact and exponential; only for small automata.

namespace opacity::oracle {

inline constexpr std::uint64_t kMaxAssignments = 1'000'000;
inline constexpr std::uint64_t kMaxWords = 10'000'000;

/// One digit per state.
using OutputAssignment = std::vector<Digit>;

/// 0 for equal words, otherwise 2^-n with n the first index where they
/// differ; when one is a proper prefix of the other, n is the shorter length.
DyadicDistance prefix_distance(std::span<const Digit> w, std::span<const Digit> v);

/// o(A word): the digit o(t(i0, word[0..m])) for each position m.
Word readout(const Automaton& a, const OutputAssignment& o, std::span<const Digit> word);

/// Every assignment in mixed-radix order (state 0 least significant), or
/// shuffled when a seed is given. Throws InstanceTooLarge past
/// kMaxAssignments.
std::vector<std::uint64_t> assignment_order(const Automaton& a,
                                            std::optional<std::uint64_t> shuffle_seed = {});

/// Decodes an index of assignment_order into the assignment itself.
OutputAssignment decode_assignment(const Automaton& a, std::uint64_t index);

/// min over all assignments o of prefix_distance(o(A word), word). Throws
/// InstanceTooLarge and DigitOutOfRange.
DyadicDistance inf_over_outputs(const Automaton& a, std::span<const Digit> word,
                                std::optional<std::uint64_t> shuffle_seed = {});

/// max of inf_over_outputs over all words of length 1..max_length. Throws
/// InstanceTooLarge when k^max_length or k^|S| is too large.
DyadicDistance brute_force_opacity(const Automaton& a, std::size_t max_length);

/// Word length past which the brute force no longer changes: 2|S| + 2.
std::size_t oracle_bound(const Automaton& a);

}  // namespace opacity::oracle

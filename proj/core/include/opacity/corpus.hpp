#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opacity/analysis.hpp"
#include "opacity/automaton.hpp"
#include "opacity/dyadic.hpp"

namespace opacity::corpus {

/// A classical automatic sequence together with its expected analysis.
struct CorpusEntry {
  std::string name;
  Dfao (*build)();
  DyadicDistance expected_opacity;
  DyadicDistance expected_complexity;
  Classification expected_classification;
  std::size_t expected_states;
  std::optional<std::size_t> expected_witness_length;
  std::string description;
};

/// The nine entries, in a fixed order.
std::span<const CorpusEntry> entries();

/// Throws UnknownCorpusName.
const CorpusEntry& entry(std::string_view name);
Dfao build(std::string_view name);

Dfao one_state(Digit k);
Dfao identity2();
Dfao thue_morse();
Dfao period_doubling();
Dfao golay_shapiro();
Dfao paperfolding();
Dfao baum_sweet();
Dfao hanoi();
Dfao ternary_digit_sum();

/// True if the entry has an independent closed form or recurrence.
bool has_recurrence(std::string_view name);

/// The first n terms computed from the sequence's recurrence or closed form,
/// never from the automaton. A term the definition leaves open (paperfolding
/// at 0) is empty. Throws UnknownCorpusName and NoRecurrence.
std::vector<std::optional<std::string>> reference_terms(std::string_view name,
                                                        std::size_t n);

/// generate(build(name), n) agrees with reference_terms(name, n) on every
/// defined term.
bool sequence_checks(std::string_view name, std::size_t n);

}  // namespace opacity::corpus

#pragma once

#include <cstddef>
#include <vector>

#include "opacity/automaton.hpp"

namespace opacity {

/// Assignment of states to blocks. Blocks are numbered by their smallest
/// member state index.
struct Partition {
  std::vector<std::size_t> block_of;
  std::size_t block_count = 0;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// A surjective homomorphism `lambda` from the source automaton onto the
/// target: lambda(i0) = i0', lambda(t(s, d)) = t'(lambda(s), d) and
/// o'(lambda(s)) = o(s).
struct FactorMap {
  Dfao source;
  Dfao target;
  std::vector<StateIndex> lambda;
};

/// Coarsest partition into indistinguishability classes, by Moore refinement
/// starting from the partition by output token.
Partition moore_partition(const Dfao& d);

/// Quotient by moore_partition, in canonical form.
FactorMap minimize(const Dfao& d);

/// minimize(normalize_zero(d)): the smallest DFAO with t(i0, 0) = i0
/// generating the same sequence. The factor map's source is the normalized
/// input.
FactorMap intrinsic_automaton(const Dfao& d);

bool is_minimal(const Dfao& d);

/// Checks the homomorphism, surjectivity and output laws of a factor map.
bool is_factor_map(const FactorMap& map);

}  // namespace opacity

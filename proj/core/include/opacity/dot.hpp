#pragma once

#include <optional>
#include <string>

#include "opacity/analysis.hpp"
#include "opacity/automaton.hpp"

namespace opacity {

/// Graphviz text for a DFAO. Nodes are labelled "name/output", parallel edges
/// share one arrow with comma-joined digits, and the initial state gets an
/// arrow from an invisible point. Edges used by `witness` are drawn red.
std::string to_dot(const Dfao& d, const std::optional<PathWitness>& witness = {});

}  // namespace opacity

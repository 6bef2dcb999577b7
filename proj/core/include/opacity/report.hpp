#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "opacity/analysis.hpp"
#include "opacity/dyadic.hpp"

namespace opacity {

/// Brute-force confirmation of a report's opacity.
struct OracleCheck {
  std::size_t max_length = 0;
  /// Empty when the instance was too large to enumerate.
  std::optional<DyadicDistance> value;
  std::string note;

  bool agrees_with(const AnalysisReport& report) const {
    return value && *value == report.opacity.value();
  }
};

/// Runs the oracle on the report's intrinsic automaton at its sufficiency
/// bound. Never throws for oversized instances; records a note instead.
OracleCheck run_oracle_check(const AnalysisReport& report);

/// Machine-readable report with a fixed field order; exact values as
/// {"num": .., "den": ..}.
std::string report_json(const AnalysisReport& report,
                        const std::optional<std::string>& name = {},
                        const std::optional<OracleCheck>& oracle = {});

/// Human-readable report, one "key: value" line per field.
std::string report_text(const AnalysisReport& report,
                        const std::optional<std::string>& name = {},
                        const std::optional<OracleCheck>& oracle = {});

}  // namespace opacity

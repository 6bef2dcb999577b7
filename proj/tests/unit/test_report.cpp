#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "opacity/corpus.hpp"
#include "opacity/report.hpp"

namespace {

using namespace opacity;

// Minimal with 21 states, so the oracle has 2^21 assignments to try.
Dfao long_cycle() {
  constexpr std::size_t n = 21;
  std::vector<std::string> names;
  std::vector<std::string> outputs;
  std::vector<StateIndex> table;
  for (std::size_t s = 0; s < n; ++s) {
    names.push_back("s" + std::to_string(s));
    outputs.push_back(std::to_string(s));
    table.push_back(static_cast<StateIndex>(s));
    table.push_back(static_cast<StateIndex>((s + 1) % n));
  }
  return Dfao(Automaton(2, std::move(names), 0, std::move(table)), std::move(outputs));
}

TEST(Report, JsonIsByteStable) {
  const AnalysisReport r = analyze_sequence(corpus::period_doubling());
  const OracleCheck oracle = run_oracle_check(r);
  EXPECT_EQ(report_json(r, std::string("period_doubling"), oracle),
            R"({
  "name": "period_doubling",
  "k": 2,
  "states": 2,
  "strictly_accessible": true,
  "classification": "INTERMEDIATE",
  "opacity": {
    "num": 1,
    "den": 4
  },
  "complexity": {
    "num": 1,
    "den": 2
  },
  "witness": {
    "word": "011",
    "state": "A",
    "pos_a": 0,
    "pos_b": 2
  },
  "inhomogeneous_states": [
    "A"
  ],
  "minimized_states": 2,
  "oracle": {
    "L": 6,
    "value": {
      "num": 1,
      "den": 4
    },
    "agrees": true
  }
}
)");
}

TEST(Report, JsonWithoutWitnessOrOracle) {
  const AnalysisReport r = analyze_sequence(corpus::golay_shapiro());
  const auto j = nlohmann::ordered_json::parse(report_json(r));
  EXPECT_FALSE(j.contains("name"));
  EXPECT_FALSE(j.contains("witness"));
  EXPECT_FALSE(j.contains("oracle"));
  EXPECT_EQ(j["classification"], "TRANSPARENT");
  EXPECT_EQ(j["opacity"]["num"], 0);
  EXPECT_EQ(j["opacity"]["den"], 1);
  EXPECT_TRUE(j["inhomogeneous_states"].empty());
}

TEST(Report, OracleSkipsLargeInstances) {
  const AnalysisReport r = analyze_sequence(long_cycle());
  EXPECT_EQ(r.states_count, 21u);
  const OracleCheck oracle = run_oracle_check(r);
  EXPECT_FALSE(oracle.value);
  EXPECT_NE(oracle.note.find("InstanceTooLarge"), std::string::npos) << oracle.note;
  EXPECT_FALSE(oracle.agrees_with(r));
  const auto j = nlohmann::ordered_json::parse(report_json(r, {}, oracle));
  EXPECT_EQ(j["oracle"]["error"], "InstanceTooLarge");
  EXPECT_NE(report_text(r, {}, oracle).find("skipped"), std::string::npos);
}

TEST(Report, Text) {
  const AnalysisReport r = analyze_sequence(corpus::period_doubling());
  const std::string text = report_text(r, std::string("period_doubling"), run_oracle_check(r));
  EXPECT_EQ(text,
            "name                  period_doubling\n"
            "k                     2\n"
            "states                2\n"
            "minimized states      2\n"
            "strictly accessible   yes\n"
            "classification        INTERMEDIATE\n"
            "opacity               1/4\n"
            "complexity            1/2\n"
            "witness               011 (state A, edges 0 and 2)\n"
            "state types           A:inhomogeneous B:1\n"
            "oracle (L=6)          1/4 (agrees)\n");
}

TEST(Report, TextForTransparent) {
  const std::string text = report_text(analyze_sequence(corpus::paperfolding()));
  EXPECT_NE(text.find("none (all paths homogeneous)"), std::string::npos);
  EXPECT_NE(text.find("TRANSPARENT"), std::string::npos);
}

}  // namespace

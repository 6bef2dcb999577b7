#include "opacity/report.hpp"

#include <nlohmann/json.hpp>

#include "opacity/error.hpp"
#include "opacity/oracle.hpp"

namespace opacity {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json fraction_json(const DyadicDistance& value) {
  const auto [num, den] = value.fraction();
  ordered_json j;
  j["num"] = num;
  j["den"] = den;
  return j;
}

std::vector<std::string> inhomogeneous_names(const AnalysisReport& report) {
  std::vector<std::string> names;
  const Automaton& a = report.intrinsic.automaton();
  for (StateIndex s = 0; s < report.state_homogeneity.size(); ++s) {
    if (!report.state_homogeneity[s].homogeneous) names.push_back(a.name(s));
  }
  return names;
}

}  // namespace

OracleCheck run_oracle_check(const AnalysisReport& report) {
  const Automaton& a = report.intrinsic.automaton();
  OracleCheck check;
  check.max_length = oracle::oracle_bound(a);
  try {
    check.value = oracle::brute_force_opacity(a, check.max_length);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InstanceTooLarge) throw;
    check.note = e.what();
  }
  return check;
}

std::string report_json(const AnalysisReport& report, const std::optional<std::string>& name,
                        const std::optional<OracleCheck>& oracle) {
  const Automaton& a = report.intrinsic.automaton();
  ordered_json j;
  if (name) j["name"] = *name;
  j["k"] = report.k;
  j["states"] = report.input_states;
  j["strictly_accessible"] = report.strictly_accessible;
  j["classification"] = std::string(to_string(report.classification));
  j["opacity"] = fraction_json(report.opacity.value());
  j["complexity"] = fraction_json(report.complexity);
  if (report.witness) {
    ordered_json w;
    w["word"] = format_word(report.witness->word, report.k);
    w["state"] = a.name(report.witness->collide_state);
    w["pos_a"] = report.witness->position_a;
    w["pos_b"] = report.witness->position_b;
    j["witness"] = std::move(w);
  }
  j["inhomogeneous_states"] = inhomogeneous_names(report);
  j["minimized_states"] = report.states_count;
  if (oracle) {
    ordered_json o;
    o["L"] = oracle->max_length;
    if (oracle->value) {
      o["value"] = fraction_json(*oracle->value);
      o["agrees"] = oracle->agrees_with(report);
    } else {
      o["error"] = "InstanceTooLarge";
    }
    j["oracle"] = std::move(o);
  }
  return j.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& report, const std::optional<std::string>& name,
                        const std::optional<OracleCheck>& oracle) {
  const Automaton& a = report.intrinsic.automaton();
  std::string out;
  auto line = [&out](const std::string& key, const std::string& value) {
    out += key;
    out.append(key.size() < 22 ? 22 - key.size() : 1, ' ');
    out += value + "\n";
  };
  if (name) line("name", *name);
  line("k", std::to_string(report.k));
  line("states", std::to_string(report.input_states));
  line("minimized states", std::to_string(report.states_count));
  line("strictly accessible", report.strictly_accessible ? "yes" : "no");
  line("classification", std::string(to_string(report.classification)));
  line("opacity", report.opacity.value().to_string());
  line("complexity", report.complexity.to_string());
  if (report.witness) {
    const PathWitness& w = *report.witness;
    line("witness", format_word(w.word, report.k) + " (state " + a.name(w.collide_state) +
                        ", edges " + std::to_string(w.position_a) + " and " +
                        std::to_string(w.position_b) + ")");
  } else {
    line("witness", "none (all paths homogeneous)");
  }
  std::string verdicts;
  for (StateIndex s = 0; s < report.state_homogeneity.size(); ++s) {
    const StateVerdict& v = report.state_homogeneity[s];
    if (!verdicts.empty()) verdicts += " ";
    verdicts += a.name(s) + ":";
    if (!v.homogeneous) {
      verdicts += "inhomogeneous";
    } else if (v.type) {
      verdicts += std::to_string(*v.type);
    } else {
      verdicts += "-";
    }
  }
  line("state types", verdicts);
  if (oracle) {
    if (oracle->value) {
      line("oracle (L=" + std::to_string(oracle->max_length) + ")",
           oracle->value->to_string() +
               (oracle->agrees_with(report) ? " (agrees)" : " (DISAGREES)"));
    } else {
      line("oracle", "skipped: " + oracle->note);
    }
  }
  return out;
}

}  // namespace opacity

#include "opacity/dot.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace opacity {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_dot(const Dfao& d, const std::optional<PathWitness>& witness) {
  const Automaton& a = d.automaton();
  const Digit k = a.radix();

  std::set<std::pair<StateIndex, Digit>> used;
  if (witness) {
    StateIndex s = a.initial();
    for (Digit dg : witness->word) {
      used.emplace(s, dg);
      s = a.next(s, dg);
    }
  }

  std::string out = "digraph dfao {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (StateIndex s = 0; s < a.state_count(); ++s) {
    out += "  " + quoted(a.name(s)) + " [shape=circle, label=" +
           quoted(a.name(s) + "/" + d.output(s)) + "];\n";
  }
  out += "  __start -> " + quoted(a.name(a.initial())) + ";\n";

  for (StateIndex s = 0; s < a.state_count(); ++s) {
    // Targets in order of their smallest digit.
    std::vector<std::pair<StateIndex, std::vector<Digit>>> groups;
    for (Digit dg = 0; dg < k; ++dg) {
      const StateIndex t = a.next(s, dg);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [t](const auto& g) { return g.first == t; });
      if (it == groups.end()) {
        groups.push_back({t, {dg}});
      } else {
        it->second.push_back(dg);
      }
    }
    for (const auto& [target, digits] : groups) {
      std::string label;
      bool highlighted = false;
      for (Digit dg : digits) {
        if (!label.empty()) label += ",";
        label += std::to_string(dg);
        highlighted = highlighted || used.count({s, dg}) != 0;
      }
      out += "  " + quoted(a.name(s)) + " -> " + quoted(a.name(target)) +
             " [label=" + quoted(label);
      if (highlighted) out += ", color=red, penwidth=2";
      out += "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace opacity

#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>

#include "opacity/analysis.hpp"
#include "opacity/aut_format.hpp"
#include "opacity/corpus.hpp"
#include "opacity/dot.hpp"
#include "opacity/error.hpp"
#include "opacity/minimization.hpp"
#include "opacity/report.hpp"

namespace opacity::cli {

namespace {

constexpr std::size_t kCorpusSequenceTerms = 1000;

Dfao load(const std::string& path, std::ostream& err) {
  Validated v = read_aut_file(path);
  if (!v.pruned_states.empty()) {
    err << "warning: " << path << ": pruned inaccessible states:";
    for (const auto& name : v.pruned_states) err << ' ' << name;
    err << '\n';
  }
  return std::move(v.dfao);
}

int cmd_analyze(const std::string& file, bool with_oracle, bool as_json, std::ostream& out,
                std::ostream& err) {
  const Dfao d = load(file, err);
  const AnalysisReport report = analyze_sequence(d);
  std::optional<OracleCheck> oracle;
  if (with_oracle) oracle = run_oracle_check(report);
  const std::string name = std::filesystem::path(file).stem().string();
  out << (as_json ? report_json(report, name, oracle) : report_text(report, name, oracle));
  if (oracle && oracle->value && !oracle->agrees_with(report)) {
    err << "error: brute-force oracle disagrees with the computed opacity\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_minimize(const std::string& file, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  const Dfao d = load(file, err);
  const FactorMap map = intrinsic_automaton(d);
  if (out_path.empty()) {
    out << serialize(map.target);
  } else {
    write_aut_file(out_path, map.target);
  }
  const Automaton& src = map.source.automaton();
  const Automaton& dst = map.target.automaton();
  for (StateIndex s = 0; s < src.state_count(); ++s) {
    out << "# map " << src.name(s) << " -> " << dst.name(map.lambda[s]) << '\n';
  }
  return kExitOk;
}

int cmd_generate(const std::string& file, std::size_t n, const std::string& sep,
                 std::ostream& out, std::ostream& err) {
  const Dfao d = load(file, err);
  const auto terms = generate(d, n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i != 0) out << sep;
    out << terms[i];
  }
  out << '\n';
  return kExitOk;
}

int cmd_dot(const std::string& file, bool with_witness, std::ostream& out, std::ostream& err) {
  const Dfao d = load(file, err);
  std::optional<PathWitness> witness;
  if (with_witness) witness = shortest_inhomogeneous_path(d.automaton());
  out << to_dot(d, witness);
  return kExitOk;
}

int cmd_equiv(const std::string& lhs, const std::string& rhs, std::ostream& out,
              std::ostream& err) {
  const Dfao a = load(lhs, err);
  const Dfao b = load(rhs, err);
  out << (are_equivalent(a, b) ? "equivalent" : "not equivalent") << '\n';
  return kExitOk;
}

struct CorpusRow {
  const corpus::CorpusEntry* entry;
  AnalysisReport report;
  OracleCheck oracle;
  std::optional<bool> sequence_ok;
  bool pass;
};

CorpusRow check_entry(const corpus::CorpusEntry& e) {
  AnalysisReport report = analyze_sequence(e.build());
  OracleCheck oracle = run_oracle_check(report);
  std::optional<bool> sequence_ok;
  if (corpus::has_recurrence(e.name)) {
    sequence_ok = corpus::sequence_checks(e.name, kCorpusSequenceTerms);
  }
  const std::optional<std::size_t> witness_length =
      report.witness ? std::optional<std::size_t>(report.witness->word.size())
                     : std::nullopt;
  bool pass = report.opacity.value() == e.expected_opacity &&
              report.complexity == e.expected_complexity &&
              report.classification == e.expected_classification &&
              report.states_count == e.expected_states &&
              oracle.agrees_with(report) && sequence_ok.value_or(true);
  if (e.expected_witness_length) pass = pass && witness_length == e.expected_witness_length;
  return CorpusRow{&e, std::move(report), std::move(oracle), sequence_ok, pass};
}

int cmd_export(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const auto& e : corpus::entries()) {
    const auto path = std::filesystem::path(dir) / (e.name + ".aut");
    write_aut_file(path, e.build());
    out << "wrote " << path.string() << '\n';
  }
  return kExitOk;
}

int cmd_corpus(bool as_json, std::ostream& out) {
  std::vector<CorpusRow> rows;
  for (const auto& e : corpus::entries()) rows.push_back(check_entry(e));
  const bool all_pass =
      std::all_of(rows.begin(), rows.end(), [](const CorpusRow& r) { return r.pass; });

  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      auto row = nlohmann::ordered_json::parse(report_json(r.report, r.entry->name, r.oracle));
      row["expected"] = {
          {"opacity", r.entry->expected_opacity.to_string()},
          {"complexity", r.entry->expected_complexity.to_string()},
          {"classification", std::string(to_string(r.entry->expected_classification))},
          {"states", r.entry->expected_states},
      };
      if (r.sequence_ok) {
        row["sequence_check"] = *r.sequence_ok;
      } else {
        row["sequence_check"] = nullptr;
      }
      row["pass"] = r.pass;
      j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
  } else {
    out << std::left << std::setw(19) << "name" << std::setw(3) << "k" << std::setw(7)
        << "states" << std::setw(9) << "opacity" << std::setw(12) << "complexity"
        << std::setw(14) << "class" << std::setw(9) << "witness" << std::setw(8) << "oracle"
        << std::setw(10) << "sequence" << "result\n";
    for (const auto& r : rows) {
      const auto& rep = r.report;
      const std::string witness =
          rep.witness ? format_word(rep.witness->word, rep.k) : std::string("-");
      const std::string oracle = r.oracle.value ? r.oracle.value->to_string() : "skip";
      const std::string seq = r.sequence_ok ? (*r.sequence_ok ? "ok" : "MISMATCH") : "n/a";
      out << std::left << std::setw(19) << r.entry->name << std::setw(3) << rep.k
          << std::setw(7) << rep.states_count << std::setw(9)
          << rep.opacity.value().to_string() << std::setw(12) << rep.complexity.to_string()
          << std::setw(14) << to_string(rep.classification) << std::setw(9) << witness
          << std::setw(8) << oracle << std::setw(10) << seq << (r.pass ? "PASS" : "FAIL")
          << '\n';
    }
    out << (all_pass ? "all corpus entries PASS" : "corpus FAILED") << '\n';
  }
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Opacity and opacity complexity of automatic sequences", "opacity"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  bool with_oracle = false;
  bool as_json = false;
  bool with_witness = false;
  std::string out_path;
  std::size_t n_terms = 0;
  std::string sep = " ";

  auto* analyze = app.add_subcommand("analyze", "Opacity report of the generated sequence");
  analyze->add_option("file", file, ".aut file")->required();
  analyze->add_flag("--oracle", with_oracle, "Confirm by brute force");
  analyze->add_flag("--json", as_json, "Emit JSON");

  auto* minimize_cmd = app.add_subcommand("minimize", "Write the intrinsic automaton");
  minimize_cmd->add_option("file", file, ".aut file")->required();
  minimize_cmd->add_option("-o,--output", out_path, "Output .aut file");

  auto* generate_cmd = app.add_subcommand("generate", "Print the first N terms");
  generate_cmd->add_option("file", file, ".aut file")->required();
  generate_cmd->add_option("-n", n_terms, "Number of terms")->required();
  generate_cmd->add_option("--sep", sep, "Separator between terms");

  auto* dot = app.add_subcommand("dot", "Graphviz rendering");
  dot->add_option("file", file, ".aut file")->required();
  dot->add_flag("--witness", with_witness, "Highlight a shortest inhomogeneous path");

  auto* corpus_cmd = app.add_subcommand("corpus", "Check every built-in example");
  corpus_cmd->add_flag("--json", as_json, "Emit JSON");
  std::string export_dir;
  corpus_cmd->add_option("--export", export_dir,
                         "Write every entry as <name>.aut into this directory instead");

  auto* equiv = app.add_subcommand("equiv", "Decide whether two DFAOs are equivalent");
  equiv->add_option("file1", file, ".aut file")->required();
  equiv->add_option("file2", file2, ".aut file")->required();

  std::vector<std::string> argv_storage{"opacity"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(file, with_oracle, as_json, out, err);
    if (minimize_cmd->parsed()) return cmd_minimize(file, out_path, out, err);
    if (generate_cmd->parsed()) return cmd_generate(file, n_terms, sep, out, err);
    if (dot->parsed()) return cmd_dot(file, with_witness, out, err);
    if (corpus_cmd->parsed()) {
      return export_dir.empty() ? cmd_corpus(as_json, out) : cmd_export(export_dir, out);
    }
    if (equiv->parsed()) return cmd_equiv(file, file2, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace opacity::cli

#include "mvlogic/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvlogic/builtin.hpp"
#include "mvlogic/corpus.hpp"
#include "mvlogic/entailment.hpp"
#include "mvlogic/parser.hpp"
#include "mvlogic/scenario_io.hpp"
#include "mvlogic/system_io.hpp"

namespace mvlogic {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Resolves a system file argument, falling back to $MVLOGIC_SYSTEM_PATH
/// for bare names.
std::string resolve_system_path(const std::string& arg) {
  if (fs::exists(arg)) {
    return arg;
  }
  if (arg.find('/') == std::string::npos) {
    if (const char* base = std::getenv("MVLOGIC_SYSTEM_PATH")) {
      fs::path candidate = fs::path(base) / arg;
      if (fs::exists(candidate)) {
        return candidate.string();
      }
      candidate += ".json";
      if (fs::exists(candidate)) {
        return candidate.string();
      }
    }
  }
  return arg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json table_json(const ConnectiveTable& table) {
  json out;
  out["name"] = table.name();
  out["arity"] = table.arity();
  out["input_domain"] = table.input_domain()->name();
  out["output_domain"] = table.output_domain()->name();
  json rows = json::array();
  for (const auto& row : table.rows()) {
    rows.push_back({{"in", row.in}, {"out", row.out}});
  }
  out["rows"] = rows;
  return out;
}

int cmd_truthtable(const std::string& system_file, const std::string& connective,
                   const std::string& format, std::ostream& out) {
  LogicSystem system = load_system_file(resolve_system_path(system_file));
  const ConnectiveTable& table = system.connective(connective);
  if (format == "json") {
    out << table_json(table).dump(2) << '\n';
    return kExitOk;
  }
  out << "connective: " << table.name() << '\n';
  out << "arity: " << table.arity() << '\n';
  out << "input: " << table.input_domain()->name() << '\n';
  out << "output: " << table.output_domain()->name() << '\n';
  for (const auto& row : table.rows()) {
    for (const auto& symbol : row.in) {
      out << symbol << ' ';
    }
    out << "-> " << row.out << '\n';
  }
  return kExitOk;
}

int cmd_eval(const std::string& system_file, const std::string& formula_text,
             const std::vector<std::string>& assignments, const std::string& format,
             std::ostream& out) {
  LogicSystem system = load_system_file(resolve_system_path(system_file));
  Formula formula = parse_formula(formula_text, system);

  Interpretation interp(system.interp_domain());
  for (const auto& assignment : assignments) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == assignment.size()) {
      throw Error(Errc::validation, "assignment '" + assignment + "' is not of the form atom=VALUE");
    }
    interp.assign(assignment.substr(0, eq), assignment.substr(eq + 1));
  }

  TruthValue value = valuate(system, formula, interp);
  if (format == "json") {
    json result;
    result["formula"] = print_formula(formula);
    result["value"] = value.symbol();
    out << result.dump(2) << '\n';
  } else {
    out << value.symbol() << '\n';
  }
  return kExitOk;
}

int cmd_entail(const std::string& system_file, const std::string& premise_file,
               const std::string& conclusion_text, const std::string& format, std::ostream& out) {
  LogicSystem system = load_system_file(resolve_system_path(system_file));

  PremiseSet gamma;
  std::istringstream lines(read_file(premise_file));
  std::string line;
  while (std::getline(lines, line)) {
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') {
      continue;
    }
    gamma.premises.push_back(parse_premise_expr(line, system));
  }

  PremiseAssertion conclusion = parse_premise(conclusion_text, system);
  EntailmentResult result = entails(gamma, conclusion, system);

  if (format == "json") {
    json output;
    output["verdict"] = to_string(result.verdict);
    output["interpretations"] = result.interpretations_checked;
    if (result.counterexample) {
      json witness = json::object();
      for (const auto& [atom, index] : result.counterexample->assignments()) {
        witness[atom] = system.interp_domain()->symbol_at(index);
      }
      output["counterexample"] = witness;
    } else {
      output["counterexample"] = nullptr;
    }
    out << output.dump(2) << '\n';
  } else {
    out << "verdict: " << to_string(result.verdict) << '\n';
    if (result.counterexample) {
      out << "counterexample:";
      for (const auto& [atom, index] : result.counterexample->assignments()) {
        out << ' ' << atom << '=' << system.interp_domain()->symbol_at(index);
      }
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_simulate(const std::string& scenario_file, const std::string& trace_json_path,
                 int step_limit_override, bool alt_initial, const std::string& format,
                 std::ostream& out) {
  AnyScenario any = load_scenario_file(scenario_file);

  if (std::holds_alternative<Scenario>(any)) {
    Scenario& scenario = std::get<Scenario>(any);
    if (step_limit_override > 0) {
      scenario.step_limit = step_limit_override;
    }
    scenario.use_alt_initial = alt_initial;
    Trace trace = run(scenario);
    if (!trace_json_path.empty()) {
      std::ofstream file(trace_json_path, std::ios::binary);
      if (!file) {
        throw Error(Errc::io, "cannot write '" + trace_json_path + "'");
      }
      file << trace_to_json(trace, scenario);
    }
    out << (format == "json" ? trace_to_json(trace, scenario) : render_trace(trace, scenario));
    switch (trace.terminal) {
    case Terminal::Equilibrium:
      return kExitOk;
    case Terminal::NoSelection:
      return kExitNoSelection;
    case Terminal::StepLimit:
      return kExitStepLimit;
    }
    return kExitOk;
  }

  EsScenario& scenario = std::get<EsScenario>(any);
  if (step_limit_override > 0) {
    scenario.step_limit = step_limit_override;
  }
  scenario.use_alt_initial = alt_initial;
  EsTrace trace = run_es(scenario);
  if (!trace_json_path.empty()) {
    std::ofstream file(trace_json_path, std::ios::binary);
    if (!file) {
      throw Error(Errc::io, "cannot write '" + trace_json_path + "'");
    }
    file << trace_to_json(trace, scenario);
  }
  out << (format == "json" ? trace_to_json(trace, scenario) : render_trace(trace, scenario));
  switch (trace.terminal) {
  case Terminal::Equilibrium:
    return kExitOk;
  case Terminal::NoSelection:
    return kExitNoSelection;
  case Terminal::StepLimit:
    return kExitStepLimit;
  }
  return kExitOk;
}

/// Default corpus location: `<system stem>_corpus.txt` next to the file.
std::string default_corpus_path(const std::string& system_path) {
  fs::path p(system_path);
  fs::path candidate = p.parent_path() / (p.stem().string() + "_corpus.txt");
  return candidate.string();
}

int cmd_corpus(const std::string& system_file, std::string corpus_file, const std::string& filter,
               const std::string& format, std::ostream& out) {
  const std::string system_path = resolve_system_path(system_file);
  LogicSystem system = load_system_file(system_path);
  if (corpus_file.empty()) {
    corpus_file = default_corpus_path(system_path);
  }
  std::vector<CorpusEntry> entries = load_corpus_file(corpus_file, system);
  CorpusReport report = run_corpus(system, entries, filter);

  if (format == "json") {
    json output;
    json list = json::array();
    for (const auto& entry : report.entries) {
      list.push_back({{"name", entry.name},
                      {"expect", to_string(entry.expect)},
                      {"actual", to_string(entry.actual)},
                      {"pass", entry.pass}});
    }
    output["entries"] = list;
    output["all_pass"] = report.all_pass;
    out << output.dump(2) << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& entry : report.entries) {
      if (entry.pass) {
        ++passed;
        out << "[PASS] " << entry.name << ": " << to_string(entry.actual) << '\n';
      } else {
        out << "[FAIL] " << entry.name << ": expected " << to_string(entry.expect) << ", got "
            << to_string(entry.actual) << '\n';
      }
    }
    out << "passed " << passed << '/' << report.entries.size() << '\n';
  }
  return report.all_pass ? kExitOk : kExitCorpusFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Configurable many-valued logic systems and belief dynamics"};
  app.name("mvlogic");
  app.require_subcommand(1);

  std::string format = "text";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
  };

  // truthtable
  std::string system_file;
  std::string connective;
  CLI::App* truthtable = app.add_subcommand("truthtable", "Print a connective table");
  truthtable->add_option("system", system_file, "System definition file")->required();
  truthtable->add_option("connective", connective, "Connective name")->required();
  add_format(truthtable);

  // eval
  std::string formula_text;
  std::vector<std::string> assignments;
  CLI::App* eval = app.add_subcommand("eval", "Valuate a formula under an interpretation");
  eval->add_option("system", system_file, "System definition file")->required();
  eval->add_option("formula", formula_text, "Formula text")->required();
  eval->add_option("-a,--assign", assignments, "Atom assignment atom=VALUE");
  add_format(eval);

  // entail
  std::string premise_file;
  std::string conclusion_text;
  CLI::App* entail = app.add_subcommand("entail", "Check a semantic entailment");
  entail->add_option("system", system_file, "System definition file")->required();
  entail->add_option("premises", premise_file, "Premise file, one expression per line")
      ->required();
  entail->add_option("conclusion", conclusion_text, "Conclusion assertion")->required();
  add_format(entail);

  // simulate
  std::string scenario_file;
  std::string trace_json_path;
  int step_limit_override = 0;
  bool alt_initial = false;
  unsigned seed = 0;
  CLI::App* simulate = app.add_subcommand("simulate", "Run a scenario to its terminal state");
  simulate->add_option("scenario", scenario_file, "Scenario file")->required();
  simulate->add_option("--trace-json", trace_json_path, "Also write the trace as JSON");
  simulate->add_option("--step-limit", step_limit_override, "Override the scenario step limit");
  simulate->add_flag("--alt-initial", alt_initial, "Use the scenario's alternate initial beliefs");
  simulate->add_option("--seed", seed, "Reserved for randomized scenarios");
  add_format(simulate);

  // corpus
  std::string corpus_file;
  std::string filter;
  CLI::App* corpus = app.add_subcommand("corpus", "Replay the bundled inference corpus");
  corpus->add_option("system", system_file, "System definition file")->required();
  corpus->add_option("--corpus-file", corpus_file,
                     "Corpus file (default: <system>_corpus.txt beside the system file)");
  corpus->add_option("--filter", filter, "Run only entries whose name contains this substring");
  add_format(corpus);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (truthtable->parsed()) {
      return cmd_truthtable(system_file, connective, format, out);
    }
    if (eval->parsed()) {
      return cmd_eval(system_file, formula_text, assignments, format, out);
    }
    if (entail->parsed()) {
      return cmd_entail(system_file, premise_file, conclusion_text, format, out);
    }
    if (simulate->parsed()) {
      return cmd_simulate(scenario_file, trace_json_path, step_limit_override, alt_initial, format,
                          out);
    }
    if (corpus->parsed()) {
      return cmd_corpus(system_file, corpus_file, filter, format, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "error: no command\n";
  return kExitInputError;
}

} // namespace mvlogic

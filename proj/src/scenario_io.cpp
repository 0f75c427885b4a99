#include "mvlogic/scenario_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mvlogic/error.hpp"

namespace mvlogic {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw Error(Errc::validation, message); }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    bad(std::string("scenario: missing '") + key + "'");
  }
  return *it;
}

char single_letter(const json& v, const char* what) {
  if (!v.is_string() || v.get<std::string>().size() != 1) {
    bad(std::string("scenario: ") + what + " must be one of \"T\", \"F\", \"U\"");
  }
  return v.get<std::string>()[0];
}

std::map<std::string, DualBelief> beliefs_from(const json& obj) {
  std::map<std::string, DualBelief> beliefs;
  for (const auto& [action, b] : obj.items()) {
    DualBelief belief;
    belief.s = subjective_from(single_letter(field(b, "s"), "subjective value"));
    belief.o = objective_from(single_letter(field(b, "o"), "objective value"));
    beliefs[action] = belief;
  }
  return beliefs;
}

std::map<std::string, ProbBelief> prob_beliefs_from(const json& obj) {
  std::map<std::string, ProbBelief> beliefs;
  for (const auto& [action, b] : obj.items()) {
    ProbBelief belief;
    belief.s = field(b, "s").get<double>();
    belief.o = field(b, "o").get<double>();
    beliefs[action] = belief;
  }
  return beliefs;
}

Regime regime_from(const std::string& word) {
  if (word == "preservative") {
    return Regime::Preservative;
  }
  if (word == "omniscient") {
    return Regime::Omniscient;
  }
  if (word == "lenient") {
    return Regime::Lenient;
  }
  bad("scenario: unknown regime '" + word + "'");
}

std::string format_prob(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

} // namespace

AnyScenario scenario_from_json(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::syntax, std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    bad("scenario must be a JSON object");
  }

  std::vector<std::string> actions;
  for (const auto& a : field(root, "actions")) {
    actions.push_back(a.get<std::string>());
  }

  const std::string theory =
      root.contains("theory") ? root["theory"].get<std::string>() : "rational";

  if (theory == "es") {
    EsScenario scenario;
    scenario.name = field(root, "name").get<std::string>();
    scenario.actions = ActionSet(actions);
    scenario.initial = prob_beliefs_from(field(root, "initial"));
    if (root.contains("initial_alt") && !root["initial_alt"].is_null()) {
      scenario.initial_alt = prob_beliefs_from(root["initial_alt"]);
    }
    if (root.contains("step_limit")) {
      scenario.step_limit = root["step_limit"].get<int>();
    }
    std::vector<EsScheduledEnvironment::Entry> entries;
    if (root.contains("env")) {
      for (const auto& e : root["env"]) {
        EsScheduledEnvironment::Entry entry;
        if (e.contains("at_t") && !e["at_t"].is_null()) {
          entry.at_t = e["at_t"].get<int>();
        }
        if (e.contains("when_selected") && !e["when_selected"].is_null()) {
          entry.when_selected = e["when_selected"].get<std::string>();
        }
        for (const auto& [action, patch] : field(e, "set").items()) {
          ProbPatch p;
          if (patch.contains("s")) {
            p.s = patch["s"].get<double>();
          }
          if (patch.contains("o")) {
            p.o = patch["o"].get<double>();
          }
          entry.set[action] = p;
        }
        entries.push_back(std::move(entry));
      }
    }
    scenario.env = std::make_shared<EsScheduledEnvironment>(std::move(entries));
    validate_es_scenario(scenario);
    return scenario;
  }
  if (theory != "rational") {
    bad("scenario: unknown theory '" + theory + "'");
  }

  Scenario scenario;
  scenario.name = field(root, "name").get<std::string>();
  scenario.actions = ActionSet(actions);
  scenario.regime = regime_from(field(root, "regime").get<std::string>());
  scenario.initial = beliefs_from(field(root, "initial"));
  if (root.contains("initial_alt") && !root["initial_alt"].is_null()) {
    scenario.initial_alt = beliefs_from(root["initial_alt"]);
  }
  if (root.contains("step_limit")) {
    scenario.step_limit = root["step_limit"].get<int>();
  }
  std::vector<ScheduledEnvironment::Entry> entries;
  if (root.contains("env")) {
    for (const auto& e : root["env"]) {
      ScheduledEnvironment::Entry entry;
      if (e.contains("at_t") && !e["at_t"].is_null()) {
        entry.at_t = e["at_t"].get<int>();
      }
      if (e.contains("when_selected") && !e["when_selected"].is_null()) {
        entry.when_selected = e["when_selected"].get<std::string>();
      }
      for (const auto& [action, patch] : field(e, "set").items()) {
        BeliefPatch p;
        if (patch.contains("s")) {
          p.s = subjective_from(single_letter(patch["s"], "subjective value"));
        }
        if (patch.contains("o")) {
          p.o = objective_from(single_letter(patch["o"], "objective value"));
        }
        entry.set[action] = p;
      }
      entries.push_back(std::move(entry));
    }
  }
  scenario.env = std::make_shared<ScheduledEnvironment>(std::move(entries));
  validate_scenario(scenario);
  return scenario;
}

AnyScenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io, "cannot open scenario file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str());
}

std::string trace_to_json(const Trace& trace, const Scenario& scenario, int indent) {
  json root;
  root["name"] = scenario.name;
  root["theory"] = "rational";
  root["regime"] = to_string(trace.regime);
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json s;
    s["t"] = step.state.t;
    json beliefs = json::object();
    for (const auto& action : scenario.actions.actions()) {
      const DualBelief& b = step.state.beliefs.at(action);
      beliefs[action] = {{"s", std::string(1, to_char(b.s))},
                         {"o", std::string(1, to_char(b.o))}};
    }
    s["beliefs"] = beliefs;
    if (step.selection.is_selected()) {
      s["selected"] = *step.selection.selected;
    } else {
      s["no_selection"] = to_string(*step.selection.no_selection);
    }
    steps.push_back(s);
  }
  root["states"] = steps;
  root["terminal"] = to_string(trace.terminal);
  if (trace.no_selection_reason) {
    root["no_selection_reason"] = to_string(*trace.no_selection_reason);
  }
  return root.dump(indent) + "\n";
}

std::string trace_to_json(const EsTrace& trace, const EsScenario& scenario, int indent) {
  json root;
  root["name"] = scenario.name;
  root["theory"] = "es";
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json s;
    s["t"] = step.state.t;
    json beliefs = json::object();
    for (const auto& action : scenario.actions.actions()) {
      const ProbBelief& b = step.state.beliefs.at(action);
      beliefs[action] = {{"s", b.s}, {"o", b.o}};
    }
    s["beliefs"] = beliefs;
    if (step.selection.is_selected()) {
      s["selected"] = *step.selection.selected;
    } else {
      s["no_selection"] = "tie";
    }
    steps.push_back(s);
  }
  root["states"] = steps;
  root["terminal"] = to_string(trace.terminal);
  if (trace.terminal == Terminal::NoSelection) {
    root["no_selection_reason"] = "tie";
  }
  return root.dump(indent) + "\n";
}

std::string render_trace(const Trace& trace, const Scenario& scenario) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << "t=" << step.state.t;
    for (const auto& action : scenario.actions.actions()) {
      const DualBelief& b = step.state.beliefs.at(action);
      out << ' ' << action << "=[" << to_char(b.s) << '/' << to_char(b.o) << ']';
    }
    if (step.selection.is_selected()) {
      out << " -> select " << *step.selection.selected;
    } else {
      out << " -> no-selection (" << to_string(*step.selection.no_selection) << ")";
    }
    out << '\n';
  }
  switch (trace.terminal) {
  case Terminal::Equilibrium: {
    const TraceStep& last = trace.steps.back();
    const std::string& action = *last.selection.selected;
    const DualBelief& b = last.state.beliefs.at(action);
    out << "equilibrium: " << action << "=[" << to_char(b.s) << '/' << to_char(b.o) << "]\n";
    break;
  }
  case Terminal::NoSelection:
    out << "no-selection: " << to_string(*trace.no_selection_reason) << '\n';
    break;
  case Terminal::StepLimit:
    out << "step-limit: " << scenario.step_limit << '\n';
    break;
  }
  return out.str();
}

std::string render_trace(const EsTrace& trace, const EsScenario& scenario) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << "t=" << step.state.t;
    for (const auto& action : scenario.actions.actions()) {
      const ProbBelief& b = step.state.beliefs.at(action);
      out << ' ' << action << "=[" << format_prob(b.s) << '/' << format_prob(b.o) << ']';
    }
    if (step.selection.is_selected()) {
      out << " -> select " << *step.selection.selected;
    } else {
      out << " -> no-selection (tie)";
    }
    out << '\n';
  }
  switch (trace.terminal) {
  case Terminal::Equilibrium: {
    const EsTraceStep& last = trace.steps.back();
    const std::string& action = *last.selection.selected;
    const ProbBelief& b = last.state.beliefs.at(action);
    out << "equilibrium: " << action << "=[" << format_prob(b.s) << '/' << format_prob(b.o)
        << "]\n";
    break;
  }
  case Terminal::NoSelection:
    out << "no-selection: tie\n";
    break;
  case Terminal::StepLimit:
    out << "step-limit: " << scenario.step_limit << '\n';
    break;
  }
  return out.str();
}

} // namespace mvlogic

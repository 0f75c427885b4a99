#include "mvlogic/es_theory.hpp"

#include <cmath>

#include "mvlogic/error.hpp"

namespace mvlogic {

EsSelection select_es(const std::map<std::string, ProbBelief>& beliefs) {
  if (beliefs.empty()) {
    throw Error(Errc::validation, "selection over an empty belief profile");
  }
  const std::string* best = nullptr;
  double best_s = 0.0;
  bool tie = false;
  for (const auto& [action, belief] : beliefs) {
    if (!std::isfinite(belief.s)) {
      throw Error(Errc::validation, "subjective value of '" + action + "' is not finite");
    }
    if (!best || belief.s > best_s) {
      best = &action;
      best_s = belief.s;
      tie = false;
    } else if (belief.s == best_s) {
      tie = true;
    }
  }
  EsSelection out;
  if (!tie) {
    out.selected = *best;
  }
  return out;
}

EsEnvPatch EsScheduledEnvironment::patch(int t, const EsState&,
                                         const std::optional<std::string>& selected) const {
  EsEnvPatch merged;
  for (const auto& entry : entries_) {
    if (entry.at_t && *entry.at_t != t) {
      continue;
    }
    if (entry.when_selected && (!selected || *entry.when_selected != *selected)) {
      continue;
    }
    for (const auto& [action, patch] : entry.set) {
      ProbPatch& slot = merged[action];
      if (patch.s) {
        slot.s = patch.s;
      }
      if (patch.o) {
        slot.o = patch.o;
      }
    }
  }
  return merged;
}

EsState step_es(const EsState& state, const EsEnvironmentRule& env) {
  EsSelection selection = select_es(state.beliefs);
  if (!selection.is_selected()) {
    throw Error(Errc::no_selection, "empirical-skepticism step requires a selection (tie)");
  }
  EsEnvPatch patch = env.patch(state.t, state, selection.selected);

  EsState next;
  next.t = state.t + 1;
  for (const auto& [action, belief] : state.beliefs) {
    ProbBelief updated;
    std::optional<double> env_o;
    if (auto it = patch.find(action); it != patch.end()) {
      env_o = it->second.o;
    }
    if (action == *selection.selected) {
      updated.s = belief.o;
      updated.o = env_o.value_or(belief.o);
    } else {
      updated.s = belief.s;
      updated.o = env_o.value_or(belief.o);
    }
    next.beliefs[action] = updated;
  }
  return next;
}

bool is_es_equilibrium(const EsState& state, const EsEnvironmentRule& env) {
  if (!select_es(state.beliefs).is_selected()) {
    return false;
  }
  return step_es(state, env).same_beliefs(state);
}

namespace {

void validate_prob(const std::string& context, double x) {
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
    throw Error(Errc::validation, context + " must lie in [0,1]");
  }
}

} // namespace

void validate_es_scenario(const EsScenario& scenario) {
  if (scenario.step_limit < 1) {
    throw Error(Errc::validation, "scenario step limit must be at least 1");
  }
  if (scenario.use_alt_initial && !scenario.initial_alt) {
    throw Error(Errc::validation, "scenario '" + scenario.name + "' has no alternate beliefs");
  }
  const auto& initial =
      scenario.use_alt_initial && scenario.initial_alt ? *scenario.initial_alt : scenario.initial;
  for (const auto& action : scenario.actions.actions()) {
    auto it = initial.find(action);
    if (it == initial.end()) {
      throw Error(Errc::validation,
                  "scenario '" + scenario.name + "' has no initial belief for '" + action + "'");
    }
    validate_prob("subjective value of '" + action + "'", it->second.s);
    validate_prob("objective value of '" + action + "'", it->second.o);
  }
  for (const auto& [action, belief] : initial) {
    (void)belief;
    if (!scenario.actions.contains(action)) {
      throw Error(Errc::validation, "scenario '" + scenario.name +
                                        "' assigns a belief to unknown action '" + action + "'");
    }
  }
  const auto* scheduled = dynamic_cast<const EsScheduledEnvironment*>(scenario.env.get());
  if (scheduled) {
    for (const auto& entry : scheduled->entries()) {
      for (const auto& [action, patch] : entry.set) {
        if (!scenario.actions.contains(action)) {
          throw Error(Errc::validation, "scenario '" + scenario.name +
                                            "' environment touches unknown action '" + action +
                                            "'");
        }
        if (patch.s) {
          throw Error(Errc::validation,
                      "scenario '" + scenario.name +
                          "': the empirical-skepticism update never rewrites subjective values");
        }
        if (patch.o) {
          validate_prob("environment objective for '" + action + "'", *patch.o);
        }
      }
    }
  }
}

EsTrace run_es(const EsScenario& scenario) {
  validate_es_scenario(scenario);

  EsTrace trace;
  EsState state;
  state.t = 0;
  state.beliefs =
      scenario.use_alt_initial && scenario.initial_alt ? *scenario.initial_alt : scenario.initial;

  for (;;) {
    EsSelection selection = select_es(state.beliefs);
    trace.steps.push_back(EsTraceStep{state, selection});
    if (!selection.is_selected()) {
      trace.terminal = Terminal::NoSelection;
      return trace;
    }
    if (is_es_equilibrium(state, *scenario.env)) {
      trace.terminal = Terminal::Equilibrium;
      return trace;
    }
    if (state.t >= scenario.step_limit) {
      trace.terminal = Terminal::StepLimit;
      return trace;
    }
    state = step_es(state, *scenario.env);
  }
}

} // namespace mvlogic

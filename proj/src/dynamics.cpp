#include "mvlogic/dynamics.hpp"

#include "mvlogic/error.hpp"

namespace mvlogic {

char to_char(Objective o) {
  switch (o) {
  case Objective::True:
    return 'T';
  case Objective::False:
    return 'F';
  case Objective::Unknown:
    return 'U';
  }
  return '?';
}

Objective objective_from(char c) {
  switch (c) {
  case 'T':
    return Objective::True;
  case 'F':
    return Objective::False;
  case 'U':
    return Objective::Unknown;
  default:
    throw Error(Errc::validation, std::string("'") + c + "' is not an objective truth value");
  }
}

bool DualBelief::mirrored() const { return to_char(s) == to_char(o); }

namespace {

// Transmission: the realized objective value becomes the next belief.
Subjective as_subjective(Objective o) { return subjective_from(to_char(o)); }

} // namespace

SelectionOutcome select_rational(const WorldState& state) {
  std::map<std::string, Subjective> profile;
  for (const auto& [action, belief] : state.beliefs) {
    profile[action] = belief.s;
  }
  return select_rational(profile);
}

EnvPatch ScheduledEnvironment::patch(int t, const WorldState&,
                                     const std::optional<std::string>& selected) const {
  EnvPatch merged;
  for (const auto& entry : entries_) {
    if (entry.at_t && *entry.at_t != t) {
      continue;
    }
    if (entry.when_selected && (!selected || *entry.when_selected != *selected)) {
      continue;
    }
    for (const auto& [action, patch] : entry.set) {
      BeliefPatch& slot = merged[action];
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

const char* to_string(Regime regime) {
  switch (regime) {
  case Regime::Preservative:
    return "preservative";
  case Regime::Omniscient:
    return "omniscient";
  case Regime::Lenient:
    return "lenient";
  }
  return "?";
}

const char* to_string(Terminal terminal) {
  switch (terminal) {
  case Terminal::Equilibrium:
    return "equilibrium";
  case Terminal::NoSelection:
    return "no-selection";
  case Terminal::StepLimit:
    return "step-limit";
  }
  return "?";
}

WorldState step_preservative(const WorldState& state, const EnvironmentRule& env) {
  SelectionOutcome selection = select_rational(state);
  if (!selection.is_selected()) {
    throw Error(Errc::no_selection,
                "preservative step requires a selection (" +
                    std::string(to_string(*selection.no_selection)) + ")");
  }
  EnvPatch patch = env.patch(state.t, state, selection.selected);

  WorldState next;
  next.t = state.t + 1;
  for (const auto& [action, belief] : state.beliefs) {
    DualBelief updated;
    std::optional<Objective> env_o;
    if (auto it = patch.find(action); it != patch.end()) {
      env_o = it->second.o;
    }
    if (action == *selection.selected) {
      updated.s = as_subjective(belief.o);
      updated.o = env_o.value_or(belief.o);
    } else {
      updated.s = belief.s; // preserved
      updated.o = env_o.value_or(belief.o);
    }
    next.beliefs[action] = updated;
  }
  return next;
}

WorldState step_omniscient(const WorldState& state, const EnvironmentRule& env) {
  for (const auto& [action, belief] : state.beliefs) {
    if (!belief.mirrored()) {
      throw Error(Errc::mirror_violation,
                  "omniscient step on '" + action + "' with subjective " + to_char(belief.s) +
                      " differing from objective " + to_char(belief.o));
    }
  }
  SelectionOutcome selection = select_rational(state);
  EnvPatch patch = env.patch(state.t, state, selection.selected);

  WorldState next;
  next.t = state.t + 1;
  for (const auto& [action, belief] : state.beliefs) {
    auto it = patch.find(action);
    Objective o = belief.o;
    if (it != patch.end() && it->second.o) {
      o = *it->second.o;
    }
    next.beliefs[action] = DualBelief{as_subjective(o), o};
  }
  return next;
}

WorldState step_lenient(const WorldState& state, const EnvironmentRule& env) {
  SelectionOutcome selection = select_rational(state);
  EnvPatch patch = env.patch(state.t, state, selection.selected);

  WorldState next;
  next.t = state.t + 1;
  for (const auto& [action, belief] : state.beliefs) {
    DualBelief updated = belief;
    auto it = patch.find(action);
    if (it != patch.end()) {
      if (it->second.s) {
        updated.s = *it->second.s;
      }
      if (it->second.o) {
        updated.o = *it->second.o;
      }
    }
    next.beliefs[action] = updated;
  }
  return next;
}

WorldState step(const WorldState& state, const EnvironmentRule& env, Regime regime) {
  switch (regime) {
  case Regime::Preservative:
    return step_preservative(state, env);
  case Regime::Omniscient:
    return step_omniscient(state, env);
  case Regime::Lenient:
    return step_lenient(state, env);
  }
  throw Error(Errc::validation, "unknown regime");
}

bool is_equilibrium(const WorldState& state, const EnvironmentRule& env, Regime regime) {
  if (!select_rational(state).is_selected()) {
    return false;
  }
  WorldState next = step(state, env, regime);
  return next.same_beliefs(state);
}

void validate_scenario(const Scenario& scenario) {
  if (scenario.step_limit < 1) {
    throw Error(Errc::validation, "scenario step limit must be at least 1");
  }
  const auto& initial =
      scenario.use_alt_initial && scenario.initial_alt ? *scenario.initial_alt : scenario.initial;
  if (scenario.use_alt_initial && !scenario.initial_alt) {
    throw Error(Errc::validation, "scenario '" + scenario.name + "' has no alternate beliefs");
  }
  for (const auto& action : scenario.actions.actions()) {
    if (initial.find(action) == initial.end()) {
      throw Error(Errc::validation,
                  "scenario '" + scenario.name + "' has no initial belief for '" + action + "'");
    }
  }
  for (const auto& [action, belief] : initial) {
    (void)belief;
    if (!scenario.actions.contains(action)) {
      throw Error(Errc::validation, "scenario '" + scenario.name +
                                        "' assigns a belief to unknown action '" + action + "'");
    }
  }
  const auto* scheduled = dynamic_cast<const ScheduledEnvironment*>(scenario.env.get());
  if (scheduled) {
    for (const auto& entry : scheduled->entries()) {
      for (const auto& [action, patch] : entry.set) {
        if (!scenario.actions.contains(action)) {
          throw Error(Errc::validation, "scenario '" + scenario.name +
                                            "' environment touches unknown action '" + action +
                                            "'");
        }
        if (patch.s && scenario.regime != Regime::Lenient) {
          throw Error(Errc::validation,
                      "scenario '" + scenario.name + "': only the lenient regime lets the " +
                          "environment rewrite subjective values");
        }
      }
    }
  }
}

Trace run(const Scenario& scenario) {
  validate_scenario(scenario);

  Trace trace;
  trace.regime = scenario.regime;

  WorldState state;
  state.t = 0;
  state.beliefs =
      scenario.use_alt_initial && scenario.initial_alt ? *scenario.initial_alt : scenario.initial;

  for (;;) {
    SelectionOutcome selection = select_rational(state);
    trace.steps.push_back(TraceStep{state, selection});
    if (!selection.is_selected()) {
      trace.terminal = Terminal::NoSelection;
      trace.no_selection_reason = selection.no_selection;
      return trace;
    }
    if (is_equilibrium(state, *scenario.env, scenario.regime)) {
      trace.terminal = Terminal::Equilibrium;
      return trace;
    }
    if (state.t >= scenario.step_limit) {
      trace.terminal = Terminal::StepLimit;
      return trace;
    }
    state = step(state, *scenario.env, scenario.regime);
  }
}

} // namespace mvlogic

#include <doctest.h>

#include <cmath>
#include <random>

#include "mvlogic/es_theory.hpp"
#include "test_support.hpp"

using namespace mvlogic;

namespace {

std::map<std::string, ProbBelief> probs(
    std::initializer_list<std::pair<const char*, std::pair<double, double>>> entries) {
  std::map<std::string, ProbBelief> out;
  for (const auto& [action, so] : entries) {
    out[action] = ProbBelief{so.first, so.second};
  }
  return out;
}

} // namespace

TEST_CASE("select_es picks the strict subjective maximum") {
  CHECK(select_es(probs({{"A0", {0.3, 0.0}}, {"A1", {0.7, 0.0}}})).selected == "A1");
  CHECK_FALSE(select_es(probs({{"A0", {0.5, 0.0}}, {"A1", {0.5, 0.0}}})).is_selected());
  CHECK_FALSE(
      select_es(probs({{"A0", {0.2, 0.0}}, {"A1", {0.9, 0.0}}, {"A2", {0.9, 0.0}}}))
          .is_selected());
  // Ties are exact: nearby values still select.
  CHECK(select_es(probs({{"A0", {0.5, 0.0}}, {"A1", {0.5000001, 0.0}}})).selected == "A1");
}

TEST_CASE("step_es mirrors the belief-preserving update on continuous values") {
  EsIdentityEnvironment identity;

  SUBCASE("selected action takes its old objective as the new subjective") {
    EsState s;
    s.beliefs = probs({{"A", {0.9, 0.2}}, {"B", {0.4, 0.6}}});
    EsState next = step_es(s, identity);
    CHECK(next.t == 1);
    CHECK(next.beliefs.at("A") == ProbBelief{0.2, 0.2});
    CHECK(next.beliefs.at("B") == ProbBelief{0.4, 0.6});
  }

  SUBCASE("environment updates the selected action's objective") {
    EsState s;
    s.beliefs = probs({{"A", {0.5, 0.8}}, {"B", {0.1, 0.3}}});
    EsScheduledEnvironment env({{{}, {}, {{"A", ProbPatch{{}, 1.0}}}}});
    EsState next = step_es(s, env);
    CHECK(next.beliefs.at("A") == ProbBelief{0.8, 1.0});
  }

  SUBCASE("a tie blocks the step") {
    EsState s;
    s.beliefs = probs({{"A", {0.5, 0.1}}, {"B", {0.5, 0.9}}});
    EsIdentityEnvironment env;
    try {
      step_es(s, env);
      FAIL("expected no_selection");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::no_selection);
    }
  }
}

TEST_CASE("step_es preserves [0,1] bounds whenever the environment does") {
  std::mt19937 rng(20240309);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> n_dist(2, 5);

  for (int round = 0; round < 1000; ++round) {
    EsState s;
    const int n = n_dist(rng);
    for (int i = 0; i < n; ++i) {
      s.beliefs["a" + std::to_string(i)] = ProbBelief{unit(rng), unit(rng)};
    }
    if (!select_es(s.beliefs).is_selected()) {
      continue;
    }
    EsEnvPatch patch;
    for (const auto& [action, b] : s.beliefs) {
      (void)b;
      if (round % 2 == 0) {
        patch[action] = ProbPatch{{}, unit(rng)};
      }
    }
    struct OneShot final : EsEnvironmentRule {
      EsEnvPatch p;
      EsEnvPatch patch(int, const EsState&, const std::optional<std::string>&) const override {
        return p;
      }
    } env;
    env.p = patch;

    EsState next = step_es(s, env);
    for (const auto& [action, b] : next.beliefs) {
      (void)action;
      CHECK(b.s >= 0.0);
      CHECK(b.s <= 1.0);
      CHECK(b.o >= 0.0);
      CHECK(b.o <= 1.0);
    }
  }
}

TEST_CASE("select_es is invariant under strictly increasing transforms") {
  std::mt19937 rng(20240310);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> scale(0.1, 4.0);
  std::uniform_int_distribution<int> n_dist(2, 6);
  std::uniform_int_distribution<int> transform_pick(0, 3);
  std::uniform_int_distribution<int> dup_coin(0, 3);

  for (int round = 0; round < 1500; ++round) {
    const int n = n_dist(rng);
    std::map<std::string, ProbBelief> beliefs;
    for (int i = 0; i < n; ++i) {
      beliefs["a" + std::to_string(i)] = ProbBelief{unit(rng), unit(rng)};
    }
    // Force ties on a quarter of the rounds so both verdicts are covered.
    if (dup_coin(rng) == 0 && n >= 2) {
      beliefs["a1"].s = beliefs["a0"].s;
    }

    const double a = scale(rng);
    const double b = unit(rng);
    const int which = transform_pick(rng);
    auto transform = [&](double x) {
      switch (which) {
      case 0:
        return a * x + b;
      case 1:
        return x * x * x;
      case 2:
        return std::exp(a * x);
      default:
        return std::atan(x) * a;
      }
    };

    std::map<std::string, ProbBelief> mapped = beliefs;
    for (auto& [action, belief] : mapped) {
      (void)action;
      belief.s = transform(belief.s);
    }

    EsSelection base = select_es(beliefs);
    EsSelection after = select_es(mapped);
    CHECK(base.is_selected() == after.is_selected());
    if (base.is_selected()) {
      CHECK(*base.selected == *after.selected);
    }
  }
}

TEST_CASE("embedding the discrete values reproduces the rational selection") {
  // T -> 1, U -> 0.5, F -> 0. Full sweep of all profiles for n <= 4.
  auto embed = [](Subjective s) {
    switch (s) {
    case Subjective::True:
      return 1.0;
    case Subjective::Unknown:
      return 0.5;
    case Subjective::False:
      return 0.0;
    }
    return 0.0;
  };

  for (std::size_t n = 2; n <= 4; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= 3;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::map<std::string, Subjective> discrete;
      std::map<std::string, ProbBelief> continuous;
      std::size_t rem = code;
      for (std::size_t i = 0; i < n; ++i) {
        auto v = static_cast<Subjective>(rem % 3);
        rem /= 3;
        const std::string name = "a" + std::to_string(i);
        discrete[name] = v;
        continuous[name] = ProbBelief{embed(v), 0.0};
      }
      SelectionOutcome rational = select_rational(discrete);
      EsSelection es = select_es(continuous);
      // On this embedding the two selection rules coincide exactly.
      CHECK(rational.is_selected() == es.is_selected());
      if (rational.is_selected()) {
        CHECK(*rational.selected == *es.selected);
      }
    }
  }
}

TEST_CASE("es scenario validation pins values to the unit interval") {
  EsScenario scenario;
  scenario.name = "bad";
  scenario.actions = ActionSet({"A", "B"});
  scenario.initial = probs({{"A", {0.5, 0.5}}, {"B", {0.2, 1.5}}});
  CHECK_THROWS_AS(validate_es_scenario(scenario), Error);

  scenario.initial = probs({{"A", {0.5, 0.5}}, {"B", {0.2, 0.9}}});
  CHECK_NOTHROW(validate_es_scenario(scenario));

  scenario.env = std::make_shared<EsScheduledEnvironment>(
      std::vector<EsScheduledEnvironment::Entry>{{{}, {}, {{"A", ProbPatch{0.4, {}}}}}});
  CHECK_THROWS_AS(validate_es_scenario(scenario), Error);

  scenario.env = std::make_shared<EsScheduledEnvironment>(
      std::vector<EsScheduledEnvironment::Entry>{{{}, {}, {{"A", ProbPatch{{}, 2.0}}}}});
  CHECK_THROWS_AS(validate_es_scenario(scenario), Error);
}

TEST_CASE("run_es walks to a terminal state") {
  EsScenario scenario;
  scenario.name = "converges";
  scenario.actions = ActionSet({"A0", "A1"});
  scenario.initial = probs({{"A0", {0.3, 0.4}}, {"A1", {0.7, 0.9}}});

  EsTrace trace = run_es(scenario);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].selection.selected == "A1");
  CHECK(trace.steps[1].state.beliefs.at("A1") == ProbBelief{0.9, 0.9});
  CHECK(trace.steps[1].selection.selected == "A1");
  CHECK(trace.terminal == Terminal::Equilibrium);

  SUBCASE("a tie is a terminal no-selection") {
    EsScenario tied = scenario;
    tied.initial = probs({{"A0", {0.5, 0.1}}, {"A1", {0.5, 0.9}}});
    EsTrace stuck = run_es(tied);
    CHECK(stuck.steps.size() == 1);
    CHECK(stuck.terminal == Terminal::NoSelection);
  }

  SUBCASE("step limit on a non-converging environment") {
    EsScenario restless = scenario;
    // Bounce the selected action's objective between two values.
    std::vector<EsScheduledEnvironment::Entry> entries;
    for (int t = 0; t <= 10; t += 2) {
      entries.push_back({t, {}, {{"A1", ProbPatch{{}, 0.6}}}});
      entries.push_back({t + 1, {}, {{"A1", ProbPatch{{}, 0.9}}}});
    }
    restless.env = std::make_shared<EsScheduledEnvironment>(std::move(entries));
    restless.step_limit = 4;
    EsTrace trace2 = run_es(restless);
    CHECK(trace2.terminal == Terminal::StepLimit);
    CHECK(trace2.steps.size() == 5);
  }
}

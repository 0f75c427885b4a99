#include <doctest.h>

#include <random>

#include "mvlogic/builtin.hpp"
#include "mvlogic/corpus.hpp"
#include "mvlogic/entailment.hpp"
#include "mvlogic/parser.hpp"
#include "test_support.hpp"

using namespace mvlogic;

namespace {

Interpretation interp_of(const LogicSystem& system,
                         std::initializer_list<std::pair<const char*, const char*>> pairs) {
  Interpretation interp(system.interp_domain());
  for (const auto& [atom, value] : pairs) {
    interp.assign(atom, value);
  }
  return interp;
}

PremiseSet gamma_of(const LogicSystem& system, std::initializer_list<const char*> lines) {
  PremiseSet gamma;
  for (const char* line : lines) {
    gamma.premises.push_back(parse_premise_expr(line, system));
  }
  return gamma;
}

} // namespace

TEST_CASE("satisfies compares the realized value against the claim") {
  LogicSystem svl = builtin::svl();

  Interpretation t = interp_of(svl, {{"phi", "T"}});
  CHECK(satisfies(t, parse_premise("v(I(phi), T) = T", svl), svl));
  CHECK(satisfies(t, parse_premise("v(V(not phi), f) = T", svl), svl));
  CHECK(satisfies(t, parse_premise("v(I(phi), F) = F", svl), svl));
  CHECK_FALSE(satisfies(t, parse_premise("v(I(phi), F) = T", svl), svl));

  Interpretation u = interp_of(svl, {{"phi", "U"}});
  CHECK_FALSE(satisfies(u, parse_premise("v(V(not phi), t) = T", svl), svl));
  CHECK(satisfies(u, parse_premise("v(V(not phi), u) = T", svl), svl));
}

TEST_CASE("satisfies distributes over all/any") {
  LogicSystem svl = builtin::svl();
  Interpretation i = interp_of(svl, {{"A1", "T"}, {"A0", "U"}});

  PremiseExpr both = parse_premise_expr("all(v(I(A1), T) = T, v(I(A0), U) = T)", svl);
  CHECK(satisfies(i, both, svl));
  PremiseExpr either = parse_premise_expr("any(v(I(A1), F) = T, v(I(A0), U) = T)", svl);
  CHECK(satisfies(i, either, svl));
  PremiseExpr neither = parse_premise_expr("any(v(I(A1), F) = T, v(I(A0), F) = T)", svl);
  CHECK_FALSE(satisfies(i, neither, svl));
}

TEST_CASE("entails enumerates every interpretation") {
  LogicSystem svl = builtin::svl();

  SUBCASE("negation reversal is valid") {
    auto result = entails(gamma_of(svl, {"v(V(not phi), f) = T"}),
                          parse_premise("v(I(phi), T) = T", svl), svl);
    CHECK(result.verdict == Verdict::Valid);
    CHECK(result.interpretations_checked == 3);
  }

  SUBCASE("conjunction reversal with a known conjunct is valid") {
    auto result =
        entails(gamma_of(svl, {"v(V((phi and psi)), f) = T", "v(I(psi), T) = T"}),
                parse_premise("v(I(phi), F) = T", svl), svl);
    CHECK(result.verdict == Verdict::Valid);
    CHECK(result.interpretations_checked == 9);
  }

  SUBCASE("forward conjunction introduction is valid") {
    auto result = entails(gamma_of(svl, {"v(I(phi), T) = T", "v(I(psi), T) = T"}),
                          parse_premise("v(V((phi and psi)), t) = T", svl), svl);
    CHECK(result.verdict == Verdict::Valid);
  }

  SUBCASE("unknown disjunct does not force a true disjunction") {
    auto result = entails(gamma_of(svl, {"v(I(phi), U) = T"}),
                          parse_premise("v(V((phi or psi)), t) = T", svl), svl);
    REQUIRE(result.verdict == Verdict::Invalid);
    REQUIRE(result.counterexample.has_value());
    // Lexicographically first witness: phi=U forced, psi scans T,F,...
    // and the T column satisfies the conclusion, so F is the first failure.
    const auto& witness = *result.counterexample;
    CHECK(interpret(witness, "phi").symbol() == "U");
    CHECK(interpret(witness, "psi").symbol() == "F");
    CHECK(result.interpretations_checked == 9);

    // The witness is re-checkable: premises hold, conclusion fails.
    for (const auto& premise : gamma_of(svl, {"v(I(phi), U) = T"}).premises) {
      CHECK(satisfies(witness, premise, svl));
    }
    CHECK_FALSE(satisfies(witness, parse_premise("v(V((phi or psi)), t) = T", svl), svl));
  }

  SUBCASE("contradictory premises are vacuous, not valid") {
    auto result = entails(gamma_of(svl, {"v(I(phi), T) = T", "v(I(phi), F) = T"}),
                          parse_premise("v(I(phi), U) = T", svl), svl);
    CHECK(result.verdict == Verdict::Vacuous);
  }

  SUBCASE("atom guard") {
    PremiseSet gamma;
    std::string formula = "a0";
    for (int i = 1; i <= 12; ++i) {
      formula = "(" + formula + " or a" + std::to_string(i) + ")";
    }
    gamma.premises.push_back(
        parse_premise_expr("v(V(" + formula + "), t) = T", svl));
    try {
      entails(gamma, parse_premise("v(I(a0), T) = T", svl), svl);
      FAIL("expected too_many_atoms");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::too_many_atoms);
    }
  }
}

TEST_CASE("the disjunctive selection premise accepts exactly three belief pairs") {
  LogicSystem svl = builtin::svl();
  PremiseExpr gamma_a1 = parse_premise_expr(
      "any(all(v(I(A1), T) = T, any(v(I(A0), F) = T, v(I(A0), U) = T)), "
      "all(v(I(A1), U) = T, v(I(A0), F) = T))",
      svl);

  std::set<std::pair<std::string, std::string>> accepted;
  for (const char* a1 : {"T", "F", "U"}) {
    for (const char* a0 : {"T", "F", "U"}) {
      Interpretation i = interp_of(svl, {{"A1", a1}, {"A0", a0}});
      if (satisfies(i, gamma_a1, svl)) {
        accepted.insert({a1, a0});
      }
    }
  }
  CHECK(accepted == std::set<std::pair<std::string, std::string>>{
                        {"T", "F"}, {"T", "U"}, {"U", "F"}});
}

TEST_CASE("counterexample monotonicity over random entailment instances") {
  LogicSystem svl = builtin::svl();
  std::mt19937 rng(20240306);
  std::uniform_int_distribution<int> value_pick(0, 2);
  std::uniform_int_distribution<int> atom_pick(0, 2);
  std::uniform_int_distribution<int> kind_pick(0, 3);
  std::uniform_int_distribution<int> count_pick(1, 3);
  static const char* kAtoms[] = {"x", "y", "z"};
  static const char* kInterpVals[] = {"T", "F", "U"};
  static const char* kValVals[] = {"t", "f", "u"};

  auto random_assertion = [&]() -> std::string {
    const char* atom = kAtoms[atom_pick(rng)];
    switch (kind_pick(rng)) {
    case 0:
      return std::string("v(I(") + atom + "), " + kInterpVals[value_pick(rng)] + ") = T";
    case 1:
      return std::string("v(I(") + atom + "), " + kInterpVals[value_pick(rng)] + ") = F";
    case 2:
      return std::string("v(V(not ") + atom + "), " + kValVals[value_pick(rng)] + ") = T";
    default:
      return std::string("v(V((") + atom + " and " + kAtoms[atom_pick(rng)] + ")), " +
             kValVals[value_pick(rng)] + ") = T";
    }
  };

  int invalid_seen = 0;
  for (int round = 0; round < 1000; ++round) {
    PremiseSet gamma;
    const int premise_count = count_pick(rng);
    for (int i = 0; i < premise_count; ++i) {
      gamma.premises.push_back(parse_premise_expr(random_assertion(), svl));
    }
    PremiseAssertion conclusion = parse_premise(random_assertion(), svl);

    EntailmentResult result = entails(gamma, conclusion, svl);
    std::size_t expected = 1;
    std::set<std::string> atoms = gamma.atoms();
    auto extra = conclusion.atoms();
    atoms.insert(extra.begin(), extra.end());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      expected *= 3;
    }
    CHECK(result.interpretations_checked == expected);

    if (result.verdict == Verdict::Invalid) {
      ++invalid_seen;
      REQUIRE(result.counterexample.has_value());
      for (const auto& premise : gamma.premises) {
        CHECK(satisfies(*result.counterexample, premise, svl));
      }
      CHECK_FALSE(satisfies(*result.counterexample, conclusion, svl));
    }
  }
  CHECK(invalid_seen > 0); // the generator must exercise the invalid path
}

TEST_CASE("bundled corpus replays cleanly") {
  LogicSystem svl = builtin::svl();
  auto entries = load_corpus_file(test::data_path("svl_corpus.txt"), svl);
  CHECK(entries.size() == 38);

  CorpusReport report = run_corpus(svl, entries);
  CHECK(report.all_pass);
  CHECK(report.entries.size() == 38);

  SUBCASE("filtering by name substring") {
    CorpusReport filtered = run_corpus(svl, entries, "negation");
    CHECK(filtered.entries.size() == 3);
    CHECK(filtered.all_pass);
  }

  SUBCASE("a corrupted conjunction cell fails the corpus") {
    // Flip (F,F) from f to t: the (F,F) fidelity entry must notice.
    LogicSystem mutated = test::svl_with_and_cell(4, "t");
    auto mutated_entries = load_corpus_file(test::data_path("svl_corpus.txt"), mutated);
    CorpusReport bad = run_corpus(mutated, mutated_entries);
    CHECK_FALSE(bad.all_pass);
  }
}

TEST_CASE("corpus parsing rejects malformed blocks") {
  LogicSystem svl = builtin::svl();
  CHECK_THROWS_AS(parse_corpus("name: x\ngiven: v(I(p), T) = T\nexpect: valid\n", svl), Error);
  CHECK_THROWS_AS(parse_corpus("name: x\ninfer: v(I(p), T) = T\n", svl), Error);
  CHECK_THROWS_AS(parse_corpus("nonsense line\n", svl), Error);
  CHECK_THROWS_AS(
      parse_corpus("name: x\ninfer: v(I(p), T) = T\nexpect: perhaps\n", svl), Error);
  CHECK(parse_corpus("# only comments\n\n", svl).empty());
}

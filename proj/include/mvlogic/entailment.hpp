#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvlogic/logic_system.hpp"
#include "mvlogic/premise.hpp"

namespace mvlogic {

/// The premise set Γ: a conjunction of premise expressions.
struct PremiseSet {
  std::vector<PremiseExpr> premises;

  std::set<std::string> atoms() const;
};

/// True iff the assertion holds under `interp`: the subject's value under
/// the interpretation equals the target exactly when the assertion claims
/// it does.
bool satisfies(const Interpretation& interp, const PremiseAssertion& assertion,
               const LogicSystem& system);

bool satisfies(const Interpretation& interp, const PremiseExpr& expr,
               const LogicSystem& system);

enum class Verdict { Valid, Invalid, Vacuous };

const char* to_string(Verdict verdict);

struct EntailmentResult {
  Verdict verdict = Verdict::Valid;
  /// Lexicographically first premise-satisfying interpretation that
  /// falsifies the conclusion; present iff verdict is Invalid.
  std::optional<Interpretation> counterexample;
  /// Total interpretations enumerated: |interp domain|^(distinct atoms).
  std::uint64_t interpretations_checked = 0;
};

inline constexpr std::size_t kMaxEntailmentAtoms = 12;

/// Brute-force semantic entailment: enumerates every total
/// interpretation of the atoms mentioned in Γ and the conclusion, in
/// lexicographic order (atoms sorted by name, values in domain order).
/// Valid when every premise-satisfying interpretation satisfies the
/// conclusion and at least one satisfies the premises; Vacuous when none
/// does. Deterministic; throws too_many_atoms above kMaxEntailmentAtoms.
EntailmentResult entails(const PremiseSet& gamma, const PremiseAssertion& conclusion,
                         const LogicSystem& system);

} // namespace mvlogic

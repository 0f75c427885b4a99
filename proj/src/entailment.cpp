#include "mvlogic/entailment.hpp"

namespace mvlogic {

std::set<std::string> PremiseSet::atoms() const {
  std::set<std::string> out;
  for (const auto& premise : premises) {
    auto sub = premise.atoms();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool satisfies(const Interpretation& interp, const PremiseAssertion& assertion,
               const LogicSystem& system) {
  TruthValue subject;
  DomainRef target_domain;
  if (assertion.kind == PremiseAssertion::SubjectKind::InterpOf) {
    subject = interpret(interp, assertion.atom);
    target_domain = system.interp_domain();
  } else {
    subject = valuate(system, *assertion.formula, interp);
    target_domain = system.valuation_domain();
  }
  TruthValue target = make_value(target_domain, assertion.target);
  return equiv_valuate(subject, target) == assertion.claimed;
}

bool satisfies(const Interpretation& interp, const PremiseExpr& expr,
               const LogicSystem& system) {
  switch (expr.kind()) {
  case PremiseExpr::Kind::Leaf:
    return satisfies(interp, expr.assertion(), system);
  case PremiseExpr::Kind::All:
    for (const auto& child : expr.children()) {
      if (!satisfies(interp, child, system)) {
        return false;
      }
    }
    return true;
  case PremiseExpr::Kind::Any:
    for (const auto& child : expr.children()) {
      if (satisfies(interp, child, system)) {
        return true;
      }
    }
    return false;
  }
  return false;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::Valid:
    return "valid";
  case Verdict::Invalid:
    return "invalid";
  case Verdict::Vacuous:
    return "vacuous";
  }
  return "?";
}

EntailmentResult entails(const PremiseSet& gamma, const PremiseAssertion& conclusion,
                         const LogicSystem& system) {
  std::set<std::string> atom_set = gamma.atoms();
  {
    auto extra = conclusion.atoms();
    atom_set.insert(extra.begin(), extra.end());
  }
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  if (atoms.size() > kMaxEntailmentAtoms) {
    throw Error(Errc::too_many_atoms,
                "entailment over " + std::to_string(atoms.size()) + " atoms exceeds the limit of " +
                    std::to_string(kMaxEntailmentAtoms));
  }

  const DomainRef& domain = system.interp_domain();
  const std::size_t n = domain->size();

  EntailmentResult result;
  bool premises_satisfiable = false;

  // Odometer over atom assignments; atoms are sorted (std::set order), the
  // first atom is most significant, so enumeration is lexicographic and the
  // first counterexample recorded is the lexicographically least. The scan
  // always runs to completion: exactly n^|atoms| interpretations.
  std::vector<std::size_t> digits(atoms.size(), 0);
  bool done = false;
  while (!done) {
    Interpretation interp(domain);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      interp.assign(atoms[i], domain->symbol_at(digits[i]));
    }
    ++result.interpretations_checked;

    bool all_premises = true;
    for (const auto& premise : gamma.premises) {
      if (!satisfies(interp, premise, system)) {
        all_premises = false;
        break;
      }
    }
    if (all_premises) {
      premises_satisfiable = true;
      if (!result.counterexample && !satisfies(interp, conclusion, system)) {
        result.counterexample = interp;
      }
    }

    done = true;
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (++digits[i] < n) {
        done = false;
        break;
      }
      digits[i] = 0;
    }
  }

  if (result.counterexample) {
    result.verdict = Verdict::Invalid;
  } else {
    result.verdict = premises_satisfiable ? Verdict::Valid : Verdict::Vacuous;
  }
  return result;
}

} // namespace mvlogic

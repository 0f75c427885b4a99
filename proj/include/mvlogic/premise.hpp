#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvlogic/formula.hpp"
#include "mvlogic/truth_domain.hpp"

namespace mvlogic {

/// One metalayer assertion: the interpretation of an atom, or the
/// valuation of a formula, claimed (not) to equal a named truth value.
/// `claimed` = False expresses a negative premise ("... is not T").
struct PremiseAssertion {
  enum class SubjectKind { InterpOf, ValuationOf };

  SubjectKind kind = SubjectKind::InterpOf;
  std::string atom;               // InterpOf
  std::optional<Formula> formula; // ValuationOf
  std::string target;             // value symbol in the matching domain
  MetaTruth claimed = MetaTruth::True;

  std::set<std::string> atoms() const;
  bool operator==(const PremiseAssertion& other) const;
};

/// Assertion combinator tree: a leaf assertion, or all(...)/any(...)
/// over sub-expressions.
class PremiseExpr {
public:
  enum class Kind { Leaf, All, Any };

  static PremiseExpr leaf(PremiseAssertion assertion);
  static PremiseExpr all(std::vector<PremiseExpr> children);
  static PremiseExpr any(std::vector<PremiseExpr> children);

  Kind kind() const { return kind_; }
  const PremiseAssertion& assertion() const { return *leaf_; }
  const std::vector<PremiseExpr>& children() const { return children_; }

  std::set<std::string> atoms() const;

private:
  PremiseExpr() = default;

  Kind kind_ = Kind::Leaf;
  std::optional<PremiseAssertion> leaf_;
  std::vector<PremiseExpr> children_;
};

} // namespace mvlogic

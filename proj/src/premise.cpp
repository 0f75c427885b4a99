#include "mvlogic/premise.hpp"

namespace mvlogic {

std::set<std::string> PremiseAssertion::atoms() const {
  if (kind == SubjectKind::InterpOf) {
    return {atom};
  }
  return formula->atoms();
}

bool PremiseAssertion::operator==(const PremiseAssertion& other) const {
  return kind == other.kind && atom == other.atom && formula == other.formula &&
         target == other.target && claimed == other.claimed;
}

PremiseExpr PremiseExpr::leaf(PremiseAssertion assertion) {
  PremiseExpr e;
  e.kind_ = Kind::Leaf;
  e.leaf_ = std::move(assertion);
  return e;
}

PremiseExpr PremiseExpr::all(std::vector<PremiseExpr> children) {
  PremiseExpr e;
  e.kind_ = Kind::All;
  e.children_ = std::move(children);
  return e;
}

PremiseExpr PremiseExpr::any(std::vector<PremiseExpr> children) {
  PremiseExpr e;
  e.kind_ = Kind::Any;
  e.children_ = std::move(children);
  return e;
}

std::set<std::string> PremiseExpr::atoms() const {
  if (kind_ == Kind::Leaf) {
    return leaf_->atoms();
  }
  std::set<std::string> out;
  for (const auto& child : children_) {
    auto sub = child.atoms();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

} // namespace mvlogic

#include "mvlogic/logic_system.hpp"

#include <set>

namespace mvlogic {

Correspondence::Correspondence(DomainRef interp_domain, DomainRef valuation_domain,
                               const std::map<std::string, std::string>& pairs)
    : interp_domain_(std::move(interp_domain)), valuation_domain_(std::move(valuation_domain)) {
  const std::size_t n = interp_domain_->size();
  if (valuation_domain_->size() != n) {
    throw Error(Errc::validation,
                "correspondence requires equal-sized domains ('" + interp_domain_->name() +
                    "' has " + std::to_string(n) + " values, '" + valuation_domain_->name() +
                    "' has " + std::to_string(valuation_domain_->size()) + ")");
  }
  if (pairs.size() != n) {
    throw Error(Errc::validation, "correspondence must cover every value of '" +
                                      interp_domain_->name() + "'");
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  fwd_.assign(n, kUnset);
  bwd_.assign(n, kUnset);
  for (const auto& [from, to] : pairs) {
    auto fi = interp_domain_->index_of(from);
    if (!fi) {
      throw Error(Errc::validation, "correspondence key '" + from + "' is not in domain '" +
                                        interp_domain_->name() + "'");
    }
    auto ti = valuation_domain_->index_of(to);
    if (!ti) {
      throw Error(Errc::validation, "correspondence value '" + to + "' is not in domain '" +
                                        valuation_domain_->name() + "'");
    }
    if (fwd_[*fi] != kUnset || bwd_[*ti] != kUnset) {
      throw Error(Errc::validation, "correspondence is not a bijection");
    }
    fwd_[*fi] = *ti;
    bwd_[*ti] = *fi;
  }
}

TruthValue Correspondence::forward(const TruthValue& interp_value) const {
  if (*interp_value.domain != *interp_domain_) {
    throw Error(Errc::domain_mismatch, "correspondence applied to a value of domain '" +
                                           interp_value.domain->name() + "'");
  }
  return TruthValue{valuation_domain_, fwd_[interp_value.index]};
}

TruthValue Correspondence::backward(const TruthValue& valuation_value) const {
  if (*valuation_value.domain != *valuation_domain_) {
    throw Error(Errc::domain_mismatch, "inverse correspondence applied to a value of domain '" +
                                           valuation_value.domain->name() + "'");
  }
  return TruthValue{interp_domain_, bwd_[valuation_value.index]};
}

std::map<std::string, std::string> Correspondence::pairs() const {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < fwd_.size(); ++i) {
    out[interp_domain_->symbol_at(i)] = valuation_domain_->symbol_at(fwd_[i]);
  }
  return out;
}

bool Correspondence::operator==(const Correspondence& other) const {
  return *interp_domain_ == *other.interp_domain_ &&
         *valuation_domain_ == *other.valuation_domain_ && fwd_ == other.fwd_;
}

LogicSystem::LogicSystem(std::string name, DomainRef interp_domain, DomainRef valuation_domain,
                         std::optional<Correspondence> correspondence,
                         std::vector<ConnectiveTable> connectives)
    : name_(std::move(name)),
      interp_domain_(std::move(interp_domain)),
      valuation_domain_(std::move(valuation_domain)),
      correspondence_(std::move(correspondence)),
      connectives_(std::move(connectives)) {
  if (correspondence_) {
    if (*correspondence_->interp_domain() != *interp_domain_ ||
        *correspondence_->valuation_domain() != *valuation_domain_) {
      throw Error(Errc::validation,
                  "system '" + name_ + "': correspondence domains do not match the system's");
    }
  }
  for (std::size_t i = 0; i < connectives_.size(); ++i) {
    const auto& table = connectives_[i];
    if (*table.input_domain() != *interp_domain_) {
      throw Error(Errc::validation, "system '" + name_ + "': connective '" + table.name() +
                                        "' input domain differs from the interp domain");
    }
    if (*table.output_domain() != *valuation_domain_) {
      throw Error(Errc::validation, "system '" + name_ + "': connective '" + table.name() +
                                        "' output domain differs from the valuation domain");
    }
    if (!by_name_.emplace(table.name(), i).second) {
      throw Error(Errc::validation,
                  "system '" + name_ + "': duplicate connective '" + table.name() + "'");
    }
  }
}

bool LogicSystem::has_connective(const std::string& name) const {
  return by_name_.count(name) != 0;
}

const ConnectiveTable& LogicSystem::connective(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) {
    throw Error(Errc::unknown_connective,
                "system '" + name_ + "' has no connective '" + name + "'");
  }
  return connectives_[it->second];
}

void Interpretation::assign(const std::string& atom, const std::string& symbol) {
  auto idx = domain_->index_of(symbol);
  if (!idx) {
    throw Error(Errc::domain_mismatch,
                "'" + symbol + "' is not a value of domain '" + domain_->name() + "'");
  }
  assign_[atom] = *idx;
}

bool Interpretation::operator==(const Interpretation& other) const {
  return *domain_ == *other.domain_ && assign_ == other.assign_;
}

TruthValue interpret(const Interpretation& interp, const std::string& atom) {
  auto it = interp.assignments().find(atom);
  if (it == interp.assignments().end()) {
    throw Error(Errc::unknown_atom, "atom '" + atom + "' was never assigned a value");
  }
  return TruthValue{interp.domain(), it->second};
}

namespace {

// Value of `f` in the interp domain: atoms read the interpretation,
// complex children valuate and come back through the correspondence.
std::size_t interp_index_of(const LogicSystem& system, const Formula& f,
                            const Interpretation& interp);

TruthValue valuate_apply(const LogicSystem& system, const Formula& f,
                         const Interpretation& interp) {
  const ConnectiveTable& table = system.connective(f.connective());
  if (f.args().size() != table.arity()) {
    throw Error(Errc::arity_mismatch, "connective '" + f.connective() + "' expects " +
                                          std::to_string(table.arity()) + " arguments, got " +
                                          std::to_string(f.args().size()));
  }
  std::vector<std::size_t> inputs;
  inputs.reserve(f.args().size());
  for (const auto& arg : f.args()) {
    inputs.push_back(interp_index_of(system, arg, interp));
  }
  return table.lookup(inputs);
}

std::size_t interp_index_of(const LogicSystem& system, const Formula& f,
                            const Interpretation& interp) {
  if (f.is_atom()) {
    return interpret(interp, f.atom_id()).index;
  }
  TruthValue value = valuate_apply(system, f, interp);
  if (!system.correspondence()) {
    throw Error(Errc::missing_correspondence,
                "system '" + system.name() +
                    "' has no correspondence; nested connectives cannot be evaluated");
  }
  return system.correspondence()->backward(value).index;
}

} // namespace

TruthValue valuate(const LogicSystem& system, const Formula& formula,
                   const Interpretation& interp) {
  if (*interp.domain() != *system.interp_domain()) {
    throw Error(Errc::domain_mismatch, "interpretation domain '" + interp.domain()->name() +
                                           "' does not match system '" + system.name() + "'");
  }
  if (formula.is_atom()) {
    TruthValue v = interpret(interp, formula.atom_id());
    if (!system.correspondence()) {
      throw Error(Errc::missing_correspondence,
                  "system '" + system.name() +
                      "' has no correspondence; a bare atom has no valuation");
    }
    return system.correspondence()->forward(v);
  }
  return valuate_apply(system, formula, interp);
}

} // namespace mvlogic

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvlogic/connective_table.hpp"
#include "mvlogic/formula.hpp"
#include "mvlogic/truth_domain.hpp"

namespace mvlogic {

/// Bijection between an interpretation domain and a valuation domain,
/// stored as index maps in both directions.
class Correspondence {
public:
  Correspondence(DomainRef interp_domain, DomainRef valuation_domain,
                 const std::map<std::string, std::string>& pairs);

  TruthValue forward(const TruthValue& interp_value) const;
  TruthValue backward(const TruthValue& valuation_value) const;

  const DomainRef& interp_domain() const { return interp_domain_; }
  const DomainRef& valuation_domain() const { return valuation_domain_; }

  std::map<std::string, std::string> pairs() const;

  bool operator==(const Correspondence& other) const;

private:
  DomainRef interp_domain_;
  DomainRef valuation_domain_;
  std::vector<std::size_t> fwd_; // interp index -> valuation index
  std::vector<std::size_t> bwd_; // valuation index -> interp index
};

/// A complete logic system: the two truth domains, an optional
/// correspondence between them, and the named connective tables.
/// Every connective maps interp-domain tuples to valuation-domain values.
///
/// Immutable after construction; safe to share across threads.
class LogicSystem {
public:
  LogicSystem(std::string name, DomainRef interp_domain, DomainRef valuation_domain,
              std::optional<Correspondence> correspondence,
              std::vector<ConnectiveTable> connectives);

  const std::string& name() const { return name_; }
  const DomainRef& interp_domain() const { return interp_domain_; }
  const DomainRef& valuation_domain() const { return valuation_domain_; }
  const std::optional<Correspondence>& correspondence() const { return correspondence_; }

  /// Connectives in declaration order.
  const std::vector<ConnectiveTable>& connectives() const { return connectives_; }
  bool has_connective(const std::string& name) const;
  const ConnectiveTable& connective(const std::string& name) const;

private:
  std::string name_;
  DomainRef interp_domain_;
  DomainRef valuation_domain_;
  std::optional<Correspondence> correspondence_;
  std::vector<ConnectiveTable> connectives_;
  std::map<std::string, std::size_t> by_name_;
};

/// Total assignment of interp-domain values to atoms.
class Interpretation {
public:
  explicit Interpretation(DomainRef domain) : domain_(std::move(domain)) {}

  const DomainRef& domain() const { return domain_; }

  void assign(const std::string& atom, const std::string& symbol);
  bool has(const std::string& atom) const { return assign_.count(atom) != 0; }

  /// Assignments in atom order (deterministic).
  const std::map<std::string, std::size_t>& assignments() const { return assign_; }

  bool operator==(const Interpretation& other) const;

private:
  DomainRef domain_;
  std::map<std::string, std::size_t> assign_;
};

/// Value assigned to `atom`; throws unknown_atom if it was never assigned.
TruthValue interpret(const Interpretation& interp, const std::string& atom);

/// Bottom-up valuation of `formula` under `interp`.
///
/// Leaf atoms take their interpretation values. A connective node looks
/// its children's values up in its table; a child that is itself a
/// connective application has its result mapped back through the
/// correspondence before the lookup, so nesting requires a
/// correspondence. A bare atom as the whole formula valuates to
/// correspondence(I(atom)).
TruthValue valuate(const LogicSystem& system, const Formula& formula,
                   const Interpretation& interp);

} // namespace mvlogic

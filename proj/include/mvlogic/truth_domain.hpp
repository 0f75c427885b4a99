#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvlogic/error.hpp"

namespace mvlogic {

/// A named, finite, ordered set of truth-value symbols.
///
/// The declared order of the symbols is significant: it fixes the
/// lexicographic order of truth-table rows and of interpretation
/// enumeration. Two domains are equal when both the name and the full
/// symbol list match.
class TruthDomain {
public:
  TruthDomain(std::string name, std::vector<std::string> values);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  bool contains(const std::string& symbol) const { return index_of(symbol).has_value(); }
  std::optional<std::size_t> index_of(const std::string& symbol) const;
  const std::string& symbol_at(std::size_t index) const { return values_.at(index); }

  bool operator==(const TruthDomain& other) const {
    return name_ == other.name_ && values_ == other.values_;
  }
  bool operator!=(const TruthDomain& other) const { return !(*this == other); }

private:
  std::string name_;
  std::vector<std::string> values_;
};

using DomainRef = std::shared_ptr<const TruthDomain>;

inline DomainRef make_domain(std::string name, std::vector<std::string> values) {
  return std::make_shared<const TruthDomain>(std::move(name), std::move(values));
}

/// One value drawn from a specific domain.
struct TruthValue {
  DomainRef domain;
  std::size_t index = 0;

  const std::string& symbol() const { return domain->symbol_at(index); }

  bool operator==(const TruthValue& other) const {
    return *domain == *other.domain && index == other.index;
  }
  bool operator!=(const TruthValue& other) const { return !(*this == other); }
};

TruthValue make_value(const DomainRef& domain, const std::string& symbol);

/// Codomain of the equivalence valuation. Deliberately not a TruthDomain:
/// the metalayer is strictly binary no matter how many values the object
/// domains carry.
enum class MetaTruth : bool { False = false, True = true };

inline const char* to_string(MetaTruth m) { return m == MetaTruth::True ? "T" : "F"; }

/// Judges whether `subject` equals `target` under symbol identity.
/// Both values must come from the same domain.
MetaTruth equiv_valuate(const TruthValue& subject, const TruthValue& target);

} // namespace mvlogic

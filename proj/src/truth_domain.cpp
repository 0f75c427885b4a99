#include "mvlogic/truth_domain.hpp"

#include <algorithm>
#include <set>

namespace mvlogic {

TruthDomain::TruthDomain(std::string name, std::vector<std::string> values)
    : name_(std::move(name)), values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(Errc::validation, "truth domain '" + name_ + "' has no values");
  }
  std::set<std::string> seen;
  for (const auto& v : values_) {
    if (v.empty()) {
      throw Error(Errc::validation, "truth domain '" + name_ + "' contains an empty symbol");
    }
    if (!seen.insert(v).second) {
      throw Error(Errc::validation,
                  "truth domain '" + name_ + "' repeats the symbol '" + v + "'");
    }
  }
}

std::optional<std::size_t> TruthDomain::index_of(const std::string& symbol) const {
  auto it = std::find(values_.begin(), values_.end(), symbol);
  if (it == values_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - values_.begin());
}

TruthValue make_value(const DomainRef& domain, const std::string& symbol) {
  auto index = domain->index_of(symbol);
  if (!index) {
    throw Error(Errc::domain_mismatch,
                "'" + symbol + "' is not a value of domain '" + domain->name() + "'");
  }
  return TruthValue{domain, *index};
}

MetaTruth equiv_valuate(const TruthValue& subject, const TruthValue& target) {
  if (*subject.domain != *target.domain) {
    throw Error(Errc::domain_mismatch,
                "cannot compare '" + subject.symbol() + "' (domain '" + subject.domain->name() +
                    "') with '" + target.symbol() + "' (domain '" + target.domain->name() + "')");
  }
  return subject.index == target.index ? MetaTruth::True : MetaTruth::False;
}

} // namespace mvlogic

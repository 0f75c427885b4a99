#include "mvlogic/connective_table.hpp"

#include <set>

namespace mvlogic {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    result *= base;
  }
  return result;
}

} // namespace

ConnectiveTable::ConnectiveTable(std::string name, std::size_t arity, DomainRef input_domain,
                                 DomainRef output_domain, const std::vector<Row>& rows)
    : name_(std::move(name)),
      arity_(arity),
      input_domain_(std::move(input_domain)),
      output_domain_(std::move(output_domain)) {
  if (arity_ == 0) {
    throw Error(Errc::validation, "connective '" + name_ + "' must have positive arity");
  }
  const std::size_t n = input_domain_->size();
  const std::size_t total = checked_pow(n, arity_);
  if (rows.size() != total) {
    throw Error(Errc::validation, "connective '" + name_ + "' needs exactly " +
                                      std::to_string(total) + " rows, got " +
                                      std::to_string(rows.size()));
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  outputs_.assign(total, kUnset);
  for (const auto& row : rows) {
    if (row.in.size() != arity_) {
      throw Error(Errc::arity_mismatch, "connective '" + name_ + "': row has " +
                                            std::to_string(row.in.size()) +
                                            " inputs, expected " + std::to_string(arity_));
    }
    std::vector<std::size_t> indices;
    indices.reserve(arity_);
    for (const auto& symbol : row.in) {
      auto idx = input_domain_->index_of(symbol);
      if (!idx) {
        throw Error(Errc::validation, "connective '" + name_ + "': input symbol '" + symbol +
                                          "' is not in domain '" + input_domain_->name() + "'");
      }
      indices.push_back(*idx);
    }
    auto out_idx = output_domain_->index_of(row.out);
    if (!out_idx) {
      throw Error(Errc::validation, "connective '" + name_ + "': output symbol '" + row.out +
                                        "' is not in domain '" + output_domain_->name() + "'");
    }
    const std::size_t flat = flat_index(indices);
    if (outputs_[flat] != kUnset) {
      throw Error(Errc::validation,
                  "connective '" + name_ + "': input tuple mapped more than once");
    }
    outputs_[flat] = *out_idx;
  }
  // Row-count + uniqueness already force totality; keep the check direct.
  for (std::size_t v : outputs_) {
    if (v == kUnset) {
      throw Error(Errc::validation, "connective '" + name_ + "' is not total");
    }
  }
}

std::size_t ConnectiveTable::flat_index(std::span<const std::size_t> inputs) const {
  const std::size_t n = input_domain_->size();
  std::size_t flat = 0;
  for (std::size_t v : inputs) {
    flat = flat * n + v;
  }
  return flat;
}

TruthValue ConnectiveTable::lookup(std::span<const std::size_t> inputs) const {
  if (inputs.size() != arity_) {
    throw Error(Errc::arity_mismatch, "connective '" + name_ + "' expects " +
                                          std::to_string(arity_) + " arguments, got " +
                                          std::to_string(inputs.size()));
  }
  for (std::size_t v : inputs) {
    if (v >= input_domain_->size()) {
      throw Error(Errc::domain_mismatch,
                  "input index out of range for connective '" + name_ + "'");
    }
  }
  return TruthValue{output_domain_, outputs_[flat_index(inputs)]};
}

TruthValue ConnectiveTable::lookup_symbols(const std::vector<std::string>& inputs) const {
  std::vector<std::size_t> indices;
  indices.reserve(inputs.size());
  for (const auto& symbol : inputs) {
    auto idx = input_domain_->index_of(symbol);
    if (!idx) {
      throw Error(Errc::domain_mismatch, "'" + symbol + "' is not a value of domain '" +
                                             input_domain_->name() + "'");
    }
    indices.push_back(*idx);
  }
  return lookup(indices);
}

std::vector<ConnectiveTable::Row> ConnectiveTable::rows() const {
  const std::size_t n = input_domain_->size();
  std::vector<Row> result;
  result.reserve(outputs_.size());
  std::vector<std::size_t> tuple(arity_, 0);
  for (std::size_t flat = 0; flat < outputs_.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t i = arity_; i-- > 0;) {
      tuple[i] = rem % n;
      rem /= n;
    }
    Row row;
    row.in.reserve(arity_);
    for (std::size_t v : tuple) {
      row.in.push_back(input_domain_->symbol_at(v));
    }
    row.out = output_domain_->symbol_at(outputs_[flat]);
    result.push_back(std::move(row));
  }
  return result;
}

bool ConnectiveTable::operator==(const ConnectiveTable& other) const {
  return name_ == other.name_ && arity_ == other.arity_ &&
         *input_domain_ == *other.input_domain_ && *output_domain_ == *other.output_domain_ &&
         outputs_ == other.outputs_;
}

std::vector<std::vector<std::string>> invert_valuation(const ConnectiveTable& table,
                                                       const std::string& output) {
  auto out_idx = table.output_domain()->index_of(output);
  if (!out_idx) {
    throw Error(Errc::domain_mismatch, "'" + output + "' is not a value of domain '" +
                                           table.output_domain()->name() + "'");
  }
  std::vector<std::vector<std::string>> preimages;
  for (const auto& row : table.rows()) {
    if (row.out == output) {
      preimages.push_back(row.in);
    }
  }
  return preimages;
}

std::uint64_t table_output_bound(const ConnectiveTable& table) {
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < table.arity(); ++i) {
    bound *= table.input_domain()->size();
  }
  std::set<std::string> distinct;
  for (const auto& row : table.rows()) {
    distinct.insert(row.out);
  }
  if (distinct.size() > bound) {
    throw Error(Errc::validation, "connective '" + table.name() +
                                      "' produces more distinct outputs than n^k");
  }
  return bound;
}

} // namespace mvlogic

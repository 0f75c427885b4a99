#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvlogic/truth_domain.hpp"

namespace mvlogic {

/// A k-ary connective given extensionally as a total truth table.
///
/// Rows are stored flat, keyed by input tuple in lexicographic order of
/// the input domain's declared value order (first argument most
/// significant). Construction rejects tables that are not total or map
/// some tuple to more than one output.
class ConnectiveTable {
public:
  struct Row {
    std::vector<std::string> in;
    std::string out;
  };

  ConnectiveTable(std::string name, std::size_t arity, DomainRef input_domain,
                  DomainRef output_domain, const std::vector<Row>& rows);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  const DomainRef& input_domain() const { return input_domain_; }
  const DomainRef& output_domain() const { return output_domain_; }

  std::size_t tuple_count() const { return outputs_.size(); }

  /// Output for a tuple of input-domain value indices.
  TruthValue lookup(std::span<const std::size_t> inputs) const;
  /// Output for a tuple of input symbols.
  TruthValue lookup_symbols(const std::vector<std::string>& inputs) const;

  /// Rows in canonical (lexicographic) order.
  std::vector<Row> rows() const;

  bool operator==(const ConnectiveTable& other) const;
  bool operator!=(const ConnectiveTable& other) const { return !(*this == other); }

private:
  std::size_t flat_index(std::span<const std::size_t> inputs) const;

  std::string name_;
  std::size_t arity_;
  DomainRef input_domain_;
  DomainRef output_domain_;
  std::vector<std::size_t> outputs_; // indexed by flat tuple index
};

/// All input tuples the table maps to `output`, in lexicographic order.
/// Empty when the output has no preimage.
std::vector<std::vector<std::string>> invert_valuation(const ConnectiveTable& table,
                                                       const std::string& output);

/// n^k for n = |input domain|, k = arity: the ceiling on distinguishable
/// outputs a k-ary table over n values can produce. Also checks that the
/// table's distinct outputs respect the bound.
std::uint64_t table_output_bound(const ConnectiveTable& table);

} // namespace mvlogic

#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mvlogic/builtin.hpp"
#include "mvlogic/logic_system.hpp"

namespace mvlogic::test {

inline std::string data_path(const std::string& name) {
  return std::string(MVLOGIC_DATA_DIR) + "/" + name;
}

inline std::string test_data_path(const std::string& name) {
  return std::string(MVLOGIC_TEST_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(static_cast<bool>(in), "cannot open " << path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Rows of a golden table file: lines `<conn> <in...> -> <out>`, keyed by
/// connective name.
inline std::map<std::string, std::vector<ConnectiveTable::Row>> load_golden_tables(
    const std::string& path) {
  std::map<std::string, std::vector<ConnectiveTable::Row>> tables;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream words(line);
    std::string conn;
    words >> conn;
    ConnectiveTable::Row row;
    std::string word;
    while (words >> word && word != "->") {
      row.in.push_back(word);
    }
    words >> row.out;
    REQUIRE_MESSAGE(!row.out.empty(), "malformed golden line: " << line);
    tables[conn].push_back(std::move(row));
  }
  return tables;
}

/// The bundled six-valued system with one cell of its `and` table
/// rewritten; `cell` indexes the canonical row order.
inline LogicSystem svl_with_and_cell(std::size_t cell, const std::string& out) {
  LogicSystem svl = builtin::svl();
  std::vector<ConnectiveTable> connectives;
  for (const auto& table : svl.connectives()) {
    if (table.name() != "and") {
      connectives.push_back(table);
      continue;
    }
    auto rows = table.rows();
    rows.at(cell).out = out;
    connectives.emplace_back("and", 2, table.input_domain(), table.output_domain(), rows);
  }
  return LogicSystem(svl.name(), svl.interp_domain(), svl.valuation_domain(),
                     svl.correspondence(), std::move(connectives));
}

inline DomainRef random_domain(std::mt19937& rng, const std::string& name) {
  std::uniform_int_distribution<std::size_t> size_dist(1, 5);
  const std::size_t size = size_dist(rng);
  std::vector<std::string> values;
  for (std::size_t i = 0; i < size; ++i) {
    values.push_back(name + "_v" + std::to_string(i));
  }
  return make_domain(name, values);
}

inline ConnectiveTable random_table(std::mt19937& rng, const std::string& name, std::size_t arity,
                                    const DomainRef& in, const DomainRef& out) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    total *= in->size();
  }
  std::uniform_int_distribution<std::size_t> out_dist(0, out->size() - 1);
  std::vector<ConnectiveTable::Row> rows;
  for (std::size_t flat = 0; flat < total; ++flat) {
    ConnectiveTable::Row row;
    std::size_t rem = flat;
    std::vector<std::size_t> tuple(arity, 0);
    for (std::size_t i = arity; i-- > 0;) {
      tuple[i] = rem % in->size();
      rem /= in->size();
    }
    for (std::size_t v : tuple) {
      row.in.push_back(in->symbol_at(v));
    }
    row.out = out->symbol_at(out_dist(rng));
    rows.push_back(std::move(row));
  }
  return ConnectiveTable(name, arity, in, out, rows);
}

/// A random system with equal-sized domains, a shuffled correspondence,
/// and a handful of connectives of arity 1..3.
inline LogicSystem random_system(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(2, 4);
  const std::size_t size = size_dist(rng);
  std::vector<std::string> in_values;
  std::vector<std::string> out_values;
  for (std::size_t i = 0; i < size; ++i) {
    in_values.push_back("i" + std::to_string(i));
    out_values.push_back("o" + std::to_string(i));
  }
  DomainRef in = make_domain("ins", in_values);
  DomainRef out = make_domain("outs", out_values);

  std::vector<std::size_t> perm(size);
  for (std::size_t i = 0; i < size; ++i) {
    perm[i] = i;
  }
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<std::string, std::string> pairs;
  for (std::size_t i = 0; i < size; ++i) {
    pairs[in_values[i]] = out_values[perm[i]];
  }

  std::uniform_int_distribution<std::size_t> count_dist(1, 3);
  std::uniform_int_distribution<std::size_t> arity_dist(1, 3);
  const std::size_t count = count_dist(rng);
  std::vector<ConnectiveTable> connectives;
  for (std::size_t i = 0; i < count; ++i) {
    connectives.push_back(
        random_table(rng, "c" + std::to_string(i), arity_dist(rng), in, out));
  }
  return LogicSystem("random", in, out, Correspondence(in, out, pairs),
                     std::move(connectives));
}

} // namespace mvlogic::test

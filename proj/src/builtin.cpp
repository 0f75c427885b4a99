#include "mvlogic/builtin.hpp"

#include "mvlogic/action_select.hpp"

namespace mvlogic::builtin {

namespace {

using Row = ConnectiveTable::Row;

std::vector<Row> rows2(const std::vector<std::string>& symbols,
                       const std::vector<std::string>& outs) {
  // outs in row-major order, first argument most significant.
  std::vector<Row> rows;
  std::size_t k = 0;
  for (const auto& a : symbols) {
    for (const auto& b : symbols) {
      rows.push_back(Row{{a, b}, outs[k++]});
    }
  }
  return rows;
}

} // namespace

LogicSystem svl() {
  DomainRef atomic = make_domain("atomic", {"T", "F", "U"});
  DomainRef cohesive = make_domain("cohesive", {"t", "f", "u"});

  std::vector<ConnectiveTable> connectives;
  connectives.emplace_back("not", 1, atomic, cohesive,
                           std::vector<Row>{{{"T"}, "f"}, {{"F"}, "t"}, {{"U"}, "u"}});
  connectives.emplace_back("and", 2, atomic, cohesive,
                           rows2({"T", "F", "U"}, {"t", "f", "u", //
                                                   "f", "f", "f", //
                                                   "u", "f", "u"}));
  connectives.emplace_back("or", 2, atomic, cohesive,
                           rows2({"T", "F", "U"}, {"t", "t", "t", //
                                                   "t", "f", "u", //
                                                   "t", "u", "u"}));
  connectives.emplace_back("then", 2, atomic, cohesive,
                           rows2({"T", "F", "U"}, {"t", "f", "f", //
                                                   "u", "u", "t", //
                                                   "u", "u", "t"}));

  SelectorTables selectors = build_selector_tables();
  connectives.push_back(selectors.sel1);
  connectives.push_back(selectors.sel0);

  Correspondence corr(atomic, cohesive, {{"T", "t"}, {"F", "f"}, {"U", "u"}});
  return LogicSystem("svl", atomic, cohesive, corr, std::move(connectives));
}

LogicSystem paircode() {
  DomainRef twoval = make_domain("twoval", {"M", "F"});
  DomainRef fourval = make_domain("fourval", {"A", "B", "C", "D"});

  std::vector<ConnectiveTable> connectives;
  connectives.emplace_back("enc", 2, twoval, fourval,
                           rows2({"M", "F"}, {"A", "C", //
                                              "B", "D"}));
  return LogicSystem("paircode", twoval, fourval, std::nullopt, std::move(connectives));
}

} // namespace mvlogic::builtin

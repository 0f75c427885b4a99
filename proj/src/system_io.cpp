#include "mvlogic/system_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mvlogic {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw Error(Errc::validation, message); }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    bad(std::string("system definition: missing '") + key + "'");
  }
  return *it;
}

} // namespace

LogicSystem system_from_json(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::syntax, std::string("system definition is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    bad("system definition must be a JSON object");
  }

  std::map<std::string, DomainRef> domains;
  for (const auto& d : field(root, "domains")) {
    std::vector<std::string> values;
    for (const auto& v : field(d, "values")) {
      values.push_back(v.get<std::string>());
    }
    DomainRef domain = make_domain(field(d, "name").get<std::string>(), std::move(values));
    if (!domains.emplace(domain->name(), domain).second) {
      bad("duplicate domain '" + domain->name() + "'");
    }
  }

  auto domain_ref = [&](const std::string& name) {
    auto it = domains.find(name);
    if (it == domains.end()) {
      bad("unknown domain '" + name + "'");
    }
    return it->second;
  };

  DomainRef interp = domain_ref(field(root, "interp_domain").get<std::string>());
  DomainRef valuation = domain_ref(field(root, "valuation_domain").get<std::string>());

  std::optional<Correspondence> correspondence;
  if (root.contains("correspondence") && !root["correspondence"].is_null()) {
    std::map<std::string, std::string> pairs;
    for (const auto& [from, to] : root["correspondence"].items()) {
      pairs[from] = to.get<std::string>();
    }
    correspondence.emplace(interp, valuation, pairs);
  }

  std::vector<ConnectiveTable> connectives;
  for (const auto& c : field(root, "connectives")) {
    std::vector<ConnectiveTable::Row> rows;
    for (const auto& r : field(c, "rows")) {
      ConnectiveTable::Row row;
      for (const auto& v : field(r, "in")) {
        row.in.push_back(v.get<std::string>());
      }
      row.out = field(r, "out").get<std::string>();
      rows.push_back(std::move(row));
    }
    connectives.emplace_back(field(c, "name").get<std::string>(),
                             field(c, "arity").get<std::size_t>(), interp, valuation, rows);
  }

  return LogicSystem(field(root, "name").get<std::string>(), interp, valuation,
                     std::move(correspondence), std::move(connectives));
}

LogicSystem load_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io, "cannot open system file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return system_from_json(buffer.str());
}

std::string system_to_json(const LogicSystem& system, int indent) {
  json root;
  root["name"] = system.name();

  json domains = json::array();
  auto domain_json = [](const DomainRef& d) {
    json out;
    out["name"] = d->name();
    out["values"] = d->values();
    return out;
  };
  domains.push_back(domain_json(system.interp_domain()));
  if (*system.valuation_domain() != *system.interp_domain()) {
    domains.push_back(domain_json(system.valuation_domain()));
  }
  root["domains"] = domains;
  root["interp_domain"] = system.interp_domain()->name();
  root["valuation_domain"] = system.valuation_domain()->name();

  if (system.correspondence()) {
    json corr = json::object();
    for (const auto& [from, to] : system.correspondence()->pairs()) {
      corr[from] = to;
    }
    root["correspondence"] = corr;
  } else {
    root["correspondence"] = nullptr;
  }

  json connectives = json::array();
  for (const auto& table : system.connectives()) {
    json c;
    c["name"] = table.name();
    c["arity"] = table.arity();
    json rows = json::array();
    for (const auto& row : table.rows()) {
      json r;
      r["in"] = row.in;
      r["out"] = row.out;
      rows.push_back(r);
    }
    c["rows"] = rows;
    connectives.push_back(c);
  }
  root["connectives"] = connectives;

  return root.dump(indent) + "\n";
}

} // namespace mvlogic

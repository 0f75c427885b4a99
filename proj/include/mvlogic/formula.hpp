#pragma once

#include <set>
#include <string>
#include <vector>

namespace mvlogic {

/// Syntax tree: an atom, or a connective applied to child formulas.
class Formula {
public:
  static Formula atom(std::string id);
  static Formula apply(std::string connective, std::vector<Formula> args);

  bool is_atom() const { return is_atom_; }
  const std::string& atom_id() const { return name_; }
  const std::string& connective() const { return name_; }
  const std::vector<Formula>& args() const { return args_; }

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

private:
  Formula() = default;

  bool is_atom_ = true;
  std::string name_;
  std::vector<Formula> args_;
};

} // namespace mvlogic

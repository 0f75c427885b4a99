#include "mvlogic/formula.hpp"

namespace mvlogic {

Formula Formula::atom(std::string id) {
  Formula f;
  f.is_atom_ = true;
  f.name_ = std::move(id);
  return f;
}

Formula Formula::apply(std::string connective, std::vector<Formula> args) {
  Formula f;
  f.is_atom_ = false;
  f.name_ = std::move(connective);
  f.args_ = std::move(args);
  return f;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  if (is_atom_) {
    out.insert(name_);
    return;
  }
  for (const auto& arg : args_) {
    arg.collect_atoms(out);
  }
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

bool Formula::operator==(const Formula& other) const {
  return is_atom_ == other.is_atom_ && name_ == other.name_ && args_ == other.args_;
}

} // namespace mvlogic

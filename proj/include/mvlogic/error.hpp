#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mvlogic {

enum class Errc {
  unknown_atom,
  domain_mismatch,
  unknown_connective,
  arity_mismatch,
  missing_correspondence,
  syntax,
  too_many_atoms,
  no_selection,
  mirror_violation,
  validation,
  io,
};

/// Library-wide exception. Parse errors carry a byte offset into the input.
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message, std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

  Errc code() const { return code_; }
  std::optional<std::size_t> offset() const { return offset_; }

private:
  Errc code_;
  std::optional<std::size_t> offset_;
};

} // namespace mvlogic

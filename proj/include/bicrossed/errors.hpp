#pragma once

#include <stdexcept>
#include <string>

namespace bicrossed {

enum class ErrorKind {
  invalid_input,
  missing_structure,
  not_coalgebra_map,
  not_complement,
  singular,
  unsupported_shape,
  verification_failed,
  parse,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bicrossed

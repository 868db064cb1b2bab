#pragma once

#include <stdexcept>
#include <string>

namespace k3fib {

// Base characteristic the library cannot handle (p = 2 or 3): the short
// classification cascade assumes 6 is invertible.
struct unsupported_characteristic : std::domain_error {
  explicit unsupported_characteristic(const std::string& what)
      : std::domain_error(what) {}
};

// Model with vanishing discriminant: not an elliptic fibration.
struct degenerate_model : std::domain_error {
  explicit degenerate_model(const std::string& what)
      : std::domain_error(what) {}
};

// Malformed textual input (model records, fixture JSON, fiber symbols).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace k3fib

#pragma once

#include <stdexcept>
#include <string>

namespace rblab {

// Parameter outside its documented domain (p < 1, nonpositive weight, ...).
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mismatched dimensions or spaces between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structurally valid input on which the quantity is undefined (e.g. all-zero
// vector list in a Rademacher ratio denominator).
struct DegenerateInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dual space requested for an exponent without a usable dual here (1 or inf).
struct UnsupportedDual : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad experiment config; `path` names the offending field (e.g. "lorentz.p").
struct ConfigError : std::runtime_error {
  std::string path;
  ConfigError(std::string field_path, const std::string& message)
      : std::runtime_error(field_path + ": " + message), path(std::move(field_path)) {}
};

}  // namespace rblab

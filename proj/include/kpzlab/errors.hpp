#pragma once

#include <stdexcept>
#include <string>

namespace kpzlab {

/// A caller-supplied parameter is outside its admissible range.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structurally malformed input data (duplicates, bad tableaux, parse errors).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to converge or left its valid regime.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kpzlab

#pragma once

#include <stdexcept>
#include <string>

namespace qeur {

/// Operand dimensions are incompatible with the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state, observable or parameter violates one of its invariants. The
/// message names the violated invariant.
class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The input is well formed but outside what the routine supports
/// (e.g. the Bloch-sphere optimizer on a qutrit).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qeur

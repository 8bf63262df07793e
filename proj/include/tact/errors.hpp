#pragma once

#include <stdexcept>
#include <string>

namespace tact {

// Bad input: negative J, malformed sector, mismatched dimensions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed object broke one of its structural invariants (zero outside the
// open intervals, non-positive off-diagonal product, ...). Indicates an
// upstream bug or a corrupted input system.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iteration failed to converge or the working precision ran out.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tact

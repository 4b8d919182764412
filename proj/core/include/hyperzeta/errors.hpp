#pragma once

#include <stdexcept>
#include <string>

namespace hyperzeta {

/// A mathematical invariant that must hold by construction was observed to
/// fail. Raised by construction-time relation checks and interpolation
/// post-checks; never recovered from inside the library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Operands live over different cyclotomic fields or Cartan data.
class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hyperzeta

#pragma once

#include <stdexcept>
#include <string>

namespace siltlab {

/// Malformed input: shape mismatches, mixed moduli, unknown vertices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested algebra violates admissibility or the modulus is not prime.
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A decision procedure could not reach a verdict within its configured
/// bounds. Never converted into a guess.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resolution bound was exceeded before the requested degree.
class UndecidableAtBound : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

/// The corpus does not contain a decomposition (completeness violated).
class CompletenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace siltlab

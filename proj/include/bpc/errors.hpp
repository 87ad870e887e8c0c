#pragma once

#include <stdexcept>
#include <string>

namespace bpc {

/// Bad input or configuration. Maps to CLI exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested algorithm needs a graph-class certificate the instance
/// does not have. Maps to CLI exit code 3.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solver failure that should not happen on valid input (e.g. simplex
/// iteration cap).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bpc

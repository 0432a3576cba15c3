#pragma once

#include <stdexcept>
#include <string>

namespace equigeo {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a constructed object fails a structural postcondition
/// (e.g. a claimed subalgebra is not closed under the bracket).
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace equigeo

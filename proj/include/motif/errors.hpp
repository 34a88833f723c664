#pragma once

#include <stdexcept>
#include <string>

namespace motif {

/// Malformed input: bad file contents, out-of-range ids, invalid covers.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The instance exceeds a hard size bound of the requested algorithm.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// A solver ran past its deadline.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

}  // namespace motif

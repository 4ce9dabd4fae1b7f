#pragma once

#include <stdexcept>
#include <string>

namespace hgcount {

/// Malformed or mathematically invalid input (bad table file, non-group, bad pair spec).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for the given arguments.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hgcount

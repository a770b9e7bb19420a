#pragma once

#include <stdexcept>
#include <string>

namespace gardner {

/// An enumeration would visit more candidates than the configured ceiling.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation sweep was requested for a side length above the factorial
/// guard.
class GuardExceeded : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// An internal consistency check failed; the input violated a type invariant
/// that construction should have ruled out.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gardner

#pragma once

#include <stdexcept>
#include <string>

namespace ramsum {

// Argument violates an operation's precondition (k = 0, k = 1 where k > 1 is
// required, mismatched tuple arity, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument is valid mathematically but outside the supported size range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Divisor-tuple enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that the mathematics guarantees did not hold. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ramsum

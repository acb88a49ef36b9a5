#pragma once

#include <stdexcept>
#include <string>

namespace nearprim {

// Invalid argument to a mathematical operation (n = 0, p composite, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A task violates one of the coprimality/size hypotheses under which a
// density statement holds. hypothesis() names the failed condition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(std::string hypothesis)
      : std::invalid_argument("hypothesis violated: " + hypothesis),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// An internal consistency check failed; signals a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nearprim

#pragma once

#include <stdexcept>
#include <string>

namespace nilverify {

/// Operation applied outside its mathematical domain (division by zero,
/// coordinates outside the supported field, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computation routes disagreed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nilverify

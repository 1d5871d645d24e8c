#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands from different universes or rings, unknown labels, or arguments
/// outside an operation's domain (e.g. a non-idempotent passed where an
/// idempotent is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive operation would enumerate more than the configured limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A self-check inside the library failed. Indicates an implementation bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A family of sections that disagree on the overlap of two cover members.
class CompatibilityError : public Error {
 public:
  CompatibilityError(std::size_t first, std::size_t second, const std::string& what)
      : Error(what), first_(first), second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace stone

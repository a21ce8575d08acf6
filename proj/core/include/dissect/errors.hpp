#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dissect {

// Raised when an enumeration or search would exceed its configured budget.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t projected, std::uint64_t limit)
      : std::runtime_error(what), projected_(projected), limit_(limit) {}

  std::uint64_t projected() const noexcept { return projected_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t projected_;
  std::uint64_t limit_;
};

// A diagonal set that is not a face of the requested complex.
class MalformedFaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A (label sequence, flag vector) pair outside the domain of the bijection.
class InvalidImageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAFaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroundSetOverlapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A closed-form count whose division was not exact, or an index out of range.
class CountDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace dissect

#pragma once

#include <stdexcept>
#include <string>

namespace twoexperts {

// Thrown when a quantity the analysis guarantees mathematically is violated
// numerically beyond tolerance (e.g. a policy mass far outside [0,1]).
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Thrown when a computation would exceed a hard resource cap
// (e.g. exhaustive enumeration above the supported horizon).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twoexperts

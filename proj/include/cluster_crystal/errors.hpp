#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cluster_crystal {

/// Raised when well-formed input hits a mathematical obstruction: a point
/// leaving its torus chart, a vanishing minor, a non-reduced word, a frozen
/// mutation index.  `kind()` is a short machine-readable tag.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Raised for malformed requests: bad flags, unparsable JSON, shape mismatches
/// in user-supplied data.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace cluster_crystal

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plankton {

enum class ErrorKind {
  InvalidRaw,
  NonPositiveGamma,
  InvalidParams,
  DomainError,
  PreconditionViolated,
  DegenerateInput,
  OutOfRange,
  NotComplexRegime,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every contract violation in the library; callers
// branch on kind() rather than on a class hierarchy.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace plankton

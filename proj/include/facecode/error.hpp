#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace facecode {

enum class ErrorKind {
  InvalidInput,
  InvalidPolytope,
  Undefined,
  BudgetExceeded,
  Inapplicable,
  Unrealized,
  GenericityFailure,
  // A checked theorem did not hold on the data. Never expected on valid input.
  TheoremViolation,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidPolytope: return "InvalidPolytope";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Inapplicable: return "Inapplicable";
    case ErrorKind::Unrealized: return "Unrealized";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

/// Throws TheoremViolation when a relation that must hold on polytopal data does not.
inline void expect_theorem(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::TheoremViolation, what);
}

}  // namespace facecode

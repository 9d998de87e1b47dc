#pragma once

#include <stdexcept>
#include <string>

namespace colorhom {

/// Malformed input: dimension mismatches, grading violations, incompatible
/// groups or fields. Never a statement about an identity failing.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linear map that was required to be invertible is singular.
class NotRegularError : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

/// A construction's hypothesis did not hold. `hypothesis()` names the check
/// that failed, `detail()` carries the rendered witness.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string hypothesis, const std::string& detail)
      : std::runtime_error("precondition '" + hypothesis + "' failed: " + detail),
        hypothesis_(std::move(hypothesis)),
        detail_(detail) {}

  const std::string& hypothesis() const { return hypothesis_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string hypothesis_;
  std::string detail_;
};

}  // namespace colorhom

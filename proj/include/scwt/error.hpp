#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scwt {

enum class ErrorKind {
  InvalidScale,
  SingularArgument,
  InvalidArgument,
  InsufficientSupport,
  UnsupportedInput,
  OnThreshold,
  BranchCrossing,
  OutOfDeterminacy,
  SimplificationInapplicable,
  InconsistentLineData,
  Shape,
  Parse,
  Spacing,
  Io,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidScale: return "invalid-scale";
    case ErrorKind::SingularArgument: return "singular-argument";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InsufficientSupport: return "insufficient-support";
    case ErrorKind::UnsupportedInput: return "unsupported-input";
    case ErrorKind::OnThreshold: return "on-threshold";
    case ErrorKind::BranchCrossing: return "branch-crossing";
    case ErrorKind::OutOfDeterminacy: return "out-of-determinacy";
    case ErrorKind::SimplificationInapplicable: return "simplification-inapplicable";
    case ErrorKind::InconsistentLineData: return "inconsistent-line-data";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Spacing: return "spacing";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

/// Every failure in the library is reported as an `Error` carrying a kind,
/// so callers can branch on the category without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace scwt

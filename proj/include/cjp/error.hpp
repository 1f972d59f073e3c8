#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cjp {

enum class ErrorKind {
  NotDivisible,
  SyntaxError,
  BadComponentIndex,
  BadCableParams,
  ColorArityMismatch,
  NonPositiveColor,
  ColorMismatchAtConnSum,
  NotContained,
  TooManyCrossings,
  DivergentLimit,
  DepthExceeded,
  InsufficientData,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

// Every failure the library reports. The kind's name is what the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

inline std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadComponentIndex: return "BadComponentIndex";
    case ErrorKind::BadCableParams: return "BadCableParams";
    case ErrorKind::ColorArityMismatch: return "ColorArityMismatch";
    case ErrorKind::NonPositiveColor: return "NonPositiveColor";
    case ErrorKind::ColorMismatchAtConnSum: return "ColorMismatchAtConnSum";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::DivergentLimit: return "DivergentLimit";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cjp

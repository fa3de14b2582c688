#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittkit {

enum class ErrorKind {
  IncompatibleLift,
  PresentationMismatch,
  NotAGroup,
  NotAbelian,
  TooLarge,
  SmallP,
  DegreeOutOfRange,
  UnsupportedPeriod,
  Unsupported,
  NoRealPoints,
  InconsistentCensus,
  InvalidArgument,
};

constexpr std::string_view error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::IncompatibleLift: return "IncompatibleLift";
    case ErrorKind::PresentationMismatch: return "PresentationMismatch";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SmallP: return "SmallP";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::UnsupportedPeriod: return "UnsupportedPeriod";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NoRealPoints: return "NoRealPoints";
    case ErrorKind::InconsistentCensus: return "InconsistentCensus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Domain error raised by library operations. `kind()` identifies the
/// failure; the CLI reports `name()` and exits with status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace wittkit

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace suspsplit {

enum class ErrorKind {
  SummandAbsent,
  RangeExceeded,
  InvalidTerm,
  UnsupportedPair,
  UnknownComposite,
  InvalidVector,
  NonTermination,
  NotNormalized,
  ShapeMismatch,
  InconsistentProfile,
  NotLocalized,
  CapExceeded,
};

std::string_view to_string(ErrorKind kind);

// Raised for inputs that are well formed but mathematically outside what the
// library can answer. The CLI maps these to exit code 3.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed input documents (exit code 2).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SummandAbsent: return "SummandAbsent";
    case ErrorKind::RangeExceeded: return "RangeExceeded";
    case ErrorKind::InvalidTerm: return "InvalidTerm";
    case ErrorKind::UnsupportedPair: return "UnsupportedPair";
    case ErrorKind::UnknownComposite: return "UnknownComposite";
    case ErrorKind::InvalidVector: return "InvalidVector";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InconsistentProfile: return "InconsistentProfile";
    case ErrorKind::NotLocalized: return "NotLocalized";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

}  // namespace suspsplit

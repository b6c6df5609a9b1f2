#pragma once

#include <stdexcept>
#include <string>

namespace sgconic {

enum class ErrorKind {
  DegenerateInput,
  PreconditionViolated,
  NotInGenericLocus,
  ContractedCurve,
  InternalInvariantViolation,
  UnsupportedField,
  UnsupportedDegree,
  GenerationFailed,
  RenderFailed,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotInGenericLocus: return "NotInGenericLocus";
    case ErrorKind::ContractedCurve: return "ContractedCurve";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::RenderFailed: return "RenderFailed";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library. `kind()` identifies the
/// failure class; the concrete subclasses below exist so callers can catch a
/// single class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class KindedError : public Error {
 public:
  explicit KindedError(const std::string& what) : Error(K, what) {}
};

using DegenerateInput = KindedError<ErrorKind::DegenerateInput>;
using PreconditionViolated = KindedError<ErrorKind::PreconditionViolated>;
using NotInGenericLocus = KindedError<ErrorKind::NotInGenericLocus>;
using ContractedCurve = KindedError<ErrorKind::ContractedCurve>;
using InternalInvariantViolation = KindedError<ErrorKind::InternalInvariantViolation>;
using UnsupportedField = KindedError<ErrorKind::UnsupportedField>;
using UnsupportedDegree = KindedError<ErrorKind::UnsupportedDegree>;
using GenerationFailed = KindedError<ErrorKind::GenerationFailed>;
using RenderFailed = KindedError<ErrorKind::RenderFailed>;

}  // namespace sgconic

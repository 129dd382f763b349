#pragma once

#include <stdexcept>
#include <string>

namespace nfcert {

// Stable machine-readable error codes surfaced by the library and the CLI.
enum class ErrorCode {
  DimensionMismatch,
  NotAnEquilibrium,
  EmptyField,
  TooLarge,
  ParseError,
  DefectiveMatrix,
  IllConditioned,
  BiorthogonalityFailure,
  CaseMismatch,
  QuadraticTermsPresent,
  NotAdapted,
  DomainError,
  Undefined,
  StiffnessFailure,
  Degenerate,
  PreconditionFailed,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorCode::EmptyField: return "EmptyField";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DefectiveMatrix: return "DefectiveMatrix";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::BiorthogonalityFailure: return "BiorthogonalityFailure";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::QuadraticTermsPresent: return "QuadraticTermsPresent";
    case ErrorCode::NotAdapted: return "NotAdapted";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::StiffnessFailure: return "StiffnessFailure";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nfcert

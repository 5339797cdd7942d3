#pragma once

#include <stdexcept>
#include <string>

namespace mcgcheck {

enum class ErrorCode {
  MissingImage,
  ParseError,
  ValidationError,
  NotArrowed,
  NoActionFact,
  MissingFact,
  ArityMismatch,
  OrientationRequired,
  GenusOutOfRange,
  NoMatchAtPosition,
  UnknownRelation,
  RegroupChangedWord,
  BoundsExceeded,
  EvidenceMissing,
  UnknownGenerator,
  Usage,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingImage: return "MissingImage";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NotArrowed: return "NotArrowed";
    case ErrorCode::NoActionFact: return "NoActionFact";
    case ErrorCode::MissingFact: return "MissingFact";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::OrientationRequired: return "OrientationRequired";
    case ErrorCode::GenusOutOfRange: return "GenusOutOfRange";
    case ErrorCode::NoMatchAtPosition: return "NoMatchAtPosition";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::RegroupChangedWord: return "RegroupChangedWord";
    case ErrorCode::BoundsExceeded: return "BoundsExceeded";
    case ErrorCode::EvidenceMissing: return "EvidenceMissing";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

/// Base exception for every failure raised by the toolkit. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a DSL document. Lines and columns are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": expected " + expected),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace mcgcheck

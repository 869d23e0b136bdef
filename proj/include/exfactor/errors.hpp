#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exfactor {

/// Failure modes raised by the library. Each numerical stage maps its
/// failures onto one of these so the driver can decide whether to refine,
/// resample or restart.
enum class Errc {
  ZeroPolynomial,
  NotDivisible,
  PathFailure,
  NotSquareFree,
  NotConverging,
  PrecisionTooLow,
  NoCandidateFound,
  InconsistentGrouping,
  UnmatchedEndpoint,
  RankOne,
  NeedMoreNodes,
  Inconsistent,
  DegreeOverflow,
  ParseError,
  FactorizationFailed,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  /// `column` is 1-based.
  ParseError(std::size_t column, const std::string& message)
      : Error(Errc::ParseError, "column " + std::to_string(column) + ": " + message),
        column_(column),
        message_(message) {}

  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t column_;
  std::string message_;
};

inline const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::PathFailure: return "PathFailure";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::NotConverging: return "NotConverging";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::NoCandidateFound: return "NoCandidateFound";
    case Errc::InconsistentGrouping: return "InconsistentGrouping";
    case Errc::UnmatchedEndpoint: return "UnmatchedEndpoint";
    case Errc::RankOne: return "RankOne";
    case Errc::NeedMoreNodes: return "NeedMoreNodes";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::ParseError: return "ParseError";
    case Errc::FactorizationFailed: return "FactorizationFailed";
  }
  return "Unknown";
}

}  // namespace exfactor

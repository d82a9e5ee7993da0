#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdes {

enum class ErrorCode {
  MalformedGrade,
  OutOfRange,
  UnknownEvent,
  InvalidAlphabet,
  DuplicateString,
  P1Violation,
  P2Violation,
  AlphabetMismatch,
  EmptyLanguage,
  UnknownState,
  NotSublanguage,
  SiteCoverViolation,
  ConditionViolated,
  EmptySpec,
  InvalidSupervisor,
  SupervisorDomainGap,
  PreconditionChain,
  EmptyMinSpec,
  BudgetExceeded,
  NotCrisp,
  SyntaxError,
  DuplicateName,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGrade: return "MALFORMED_GRADE";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::UnknownEvent: return "UNKNOWN_EVENT";
    case ErrorCode::InvalidAlphabet: return "INVALID_ALPHABET";
    case ErrorCode::DuplicateString: return "DUPLICATE_STRING";
    case ErrorCode::P1Violation: return "P1_VIOLATION";
    case ErrorCode::P2Violation: return "P2_VIOLATION";
    case ErrorCode::AlphabetMismatch: return "ALPHABET_MISMATCH";
    case ErrorCode::EmptyLanguage: return "EMPTY_LANGUAGE";
    case ErrorCode::UnknownState: return "UNKNOWN_STATE";
    case ErrorCode::NotSublanguage: return "NOT_SUBLANGUAGE";
    case ErrorCode::SiteCoverViolation: return "SITE_COVER_VIOLATION";
    case ErrorCode::ConditionViolated: return "CONDITION_VIOLATED";
    case ErrorCode::EmptySpec: return "EMPTY_SPEC";
    case ErrorCode::InvalidSupervisor: return "INVALID_SUPERVISOR";
    case ErrorCode::SupervisorDomainGap: return "SUPERVISOR_DOMAIN_GAP";
    case ErrorCode::PreconditionChain: return "PRECONDITION_CHAIN";
    case ErrorCode::EmptyMinSpec: return "EMPTY_MIN_SPEC";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::NotCrisp: return "NOT_CRISP";
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::DuplicateName: return "DUPLICATE_NAME";
  }
  return "UNKNOWN";
}

/// Base exception for every failure raised by the library. The code is the
/// machine-readable part; `what()` carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace fdes

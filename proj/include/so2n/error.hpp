#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace so2n {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  DimensionMismatch,
  ClosureBudgetExceeded,
  BadParams,
  AnalysisBudgetExceeded,
  NotIrreducible,
  NotSymmetric,
  BadStructure,
  NotInM,
  DomainViolation,
  NotNegativePlane,
  NotInLieBall,
  NotLightlike,
  InputError,
};

inline std::string_view code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::ClosureBudgetExceeded: return "CLOSURE_BUDGET_EXCEEDED";
    case ErrorCode::BadParams: return "BAD_PARAMS";
    case ErrorCode::AnalysisBudgetExceeded: return "ANALYSIS_BUDGET_EXCEEDED";
    case ErrorCode::NotIrreducible: return "NOT_IRREDUCIBLE";
    case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::BadStructure: return "BAD_STRUCTURE";
    case ErrorCode::NotInM: return "NOT_IN_M";
    case ErrorCode::DomainViolation: return "DOMAIN_VIOLATION";
    case ErrorCode::NotNegativePlane: return "NOT_NEGATIVE_PLANE";
    case ErrorCode::NotInLieBall: return "NOT_IN_LIEBALL";
    case ErrorCode::NotLightlike: return "NOT_LIGHTLIKE";
    case ErrorCode::InputError: return "INPUT_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code), message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace so2n

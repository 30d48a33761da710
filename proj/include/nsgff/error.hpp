#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsgff {

enum class ErrorCode {
  gcd_not_one,
  input_too_large,
  invalid_input,
  not_a_member,
  owner_mismatch,
  not_ffg,
  not_reflexive,
  not_minimal_multiplicity,
  bad_parameters,
  out_of_table,
  budget_exceeded,
  ceiling_exceeded,
  parse_error,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::gcd_not_one: return "GcdNotOne";
    case ErrorCode::input_too_large: return "InputTooLarge";
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::not_a_member: return "NotAMember";
    case ErrorCode::owner_mismatch: return "OwnerMismatch";
    case ErrorCode::not_ffg: return "NotFFG";
    case ErrorCode::not_reflexive: return "NotReflexive";
    case ErrorCode::not_minimal_multiplicity: return "NotMinimalMultiplicity";
    case ErrorCode::bad_parameters: return "BadParameters";
    case ErrorCode::out_of_table: return "OutOfTable";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::ceiling_exceeded: return "CeilingExceeded";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Base exception for every recoverable library failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsgff

#include "lgc/error.hpp"

namespace lgc {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TruncatedStream: return "TruncatedStream";
    case ErrorCode::MalformedCodeword: return "MalformedCodeword";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::WidthOverflow: return "WidthOverflow";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::DuplicateColumns: return "DuplicateColumns";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotEntailed: return "NotEntailed";
    case ErrorCode::ContractViolation: return "ContractViolation";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
  }
  return "Error";
}

}  // namespace lgc

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgc {

enum class ErrorCode {
  SyntaxError,
  VariableOutOfRange,
  UniverseTooLarge,
  DomainError,
  TruncatedStream,
  MalformedCodeword,
  RankOutOfRange,
  WidthOverflow,
  SearchExhausted,
  DuplicateColumns,
  PreconditionViolated,
  NotEntailed,
  ContractViolation,
  MalformedHeader,
};

std::string_view error_name(ErrorCode code) noexcept;

// All library failures surface as this type; `code()` tells callers (and the
// CLI exit-code mapping) which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lgc

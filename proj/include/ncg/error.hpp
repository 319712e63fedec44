#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncg {

enum class ErrorCode {
  OutOfRange,
  MalformedPermutation,
  ParityViolation,
  SyntaxError,
  ParameterError,
  CapExceeded,
  ProductOfLazy,
  InvalidTable,
  InvalidComplex,
  Timeout,
  TooLarge,
  NotAClique,
  NotAMatroid,
  Inconsistent,
  NotAcGroup,
  AbelianGroup,
  NotMaximal,
  BadInput,
  SpecMismatch,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace ncg

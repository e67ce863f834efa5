#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tokensign {

enum class ErrorCode {
  DuplicateEdge,
  LoopEdge,
  VertexOutOfRange,
  BadSignToken,
  HeaderMismatch,
  MalformedInput,
  UnknownFamily,
  NTooSmall,
  SizeMismatch,
  NotBalanced,
  KOutOfRange,
  SizeCapExceeded,
  DivisionByZeroPolynomial,
  NotSymmetric,
  NoConvergence,
  TooLarge,
  UnderlyingMismatch,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI prints `name()` so scripts can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace tokensign

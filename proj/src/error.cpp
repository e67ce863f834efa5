#include "tokensign/error.hpp"

namespace tokensign {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::BadSignToken: return "BadSignToken";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnderlyingMismatch: return "UnderlyingMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

}  // namespace tokensign

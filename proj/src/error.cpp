#include "ncg/error.hpp"

namespace ncg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MalformedPermutation: return "MalformedPermutation";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ParameterError: return "ParameterError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ProductOfLazy: return "ProductOfLazy";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAClique: return "NotAClique";
    case ErrorCode::NotAMatroid: return "NotAMatroid";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotAcGroup: return "NotAcGroup";
    case ErrorCode::AbelianGroup: return "AbelianGroup";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace ncg

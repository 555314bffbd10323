#include "toricfan/error.hpp"

namespace toricfan {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotAFan: return "NotAFan";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotCohenMacaulay: return "NotCohenMacaulay";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace toricfan

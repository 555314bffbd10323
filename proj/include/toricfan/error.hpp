#pragma once

#include <stdexcept>
#include <string>

namespace toricfan {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotPointed,
  NotAFan,
  NotPure,
  NotCohenMacaulay,
  ParseError,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; the C API maps it onto tf_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricfan

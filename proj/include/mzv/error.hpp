#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzv {

enum class ErrorCode {
  ZeroOrder,
  LengthGuard,
  NotInH1,
  NonzeroConstantTerm,
  EmptyWord,
  TooManyFactors,
  InvalidState,
  NotAChain,
  Inadmissible,
  CutoffTooSmall,
  InadmissibleWord,
  NonRationalCoefficient,
  NonRationalResult,
  UnsupportedK,
  IndexOutOfRange,
  ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Exception carrying one of the library's named error conditions.
///
/// `what()` is "<Name>: <detail>"; the CLI prints `error: <Name>` from `code()`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace mzv

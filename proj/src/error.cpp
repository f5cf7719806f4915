#include "mzv/error.hpp"

namespace mzv {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroOrder: return "ZeroOrder";
    case ErrorCode::LengthGuard: return "LengthGuard";
    case ErrorCode::NotInH1: return "NotInH1";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::TooManyFactors: return "TooManyFactors";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::InadmissibleWord: return "InadmissibleWord";
    case ErrorCode::NonRationalCoefficient: return "NonRationalCoefficient";
    case ErrorCode::NonRationalResult: return "NonRationalResult";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace mzv

#include "linthresh/error.hpp"

namespace linthresh {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSample: return "INVALID_SAMPLE";
    case ErrorCode::InvalidConfig: return "INVALID_CONFIG";
    case ErrorCode::DegenerateDesign: return "DEGENERATE_DESIGN";
    case ErrorCode::InsufficientSuffix: return "INSUFFICIENT_SUFFIX";
    case ErrorCode::NoCandidates: return "NO_CANDIDATES";
    case ErrorCode::MissingColumn: return "MISSING_COLUMN";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::TooFewRows: return "TOO_FEW_ROWS";
    case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

int exit_status(ErrorCode code) noexcept {
  // 1 is reserved for unexpected failures, 2 for flag/usage errors.
  switch (code) {
    case ErrorCode::InvalidSample: return 3;
    case ErrorCode::InvalidConfig: return 4;
    case ErrorCode::DegenerateDesign: return 5;
    case ErrorCode::InsufficientSuffix: return 6;
    case ErrorCode::NoCandidates: return 7;
    case ErrorCode::MissingColumn: return 8;
    case ErrorCode::ParseError: return 9;
    case ErrorCode::TooFewRows: return 10;
    case ErrorCode::Io: return 11;
  }
  return 1;
}

}  // namespace linthresh

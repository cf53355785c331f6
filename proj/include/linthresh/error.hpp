#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linthresh {

enum class ErrorCode {
  InvalidSample,
  InvalidConfig,
  DegenerateDesign,
  InsufficientSuffix,
  NoCandidates,
  MissingColumn,
  ParseError,
  TooFewRows,
  Io,
};

/// Stable machine-readable name, e.g. "DEGENERATE_DESIGN".
std::string_view error_code_name(ErrorCode code) noexcept;

/// Process exit status the CLI reports for `code` (always nonzero).
int exit_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DegenerateDesign : public Error {
 public:
  explicit DegenerateDesign(const std::string& what)
      : Error(ErrorCode::DegenerateDesign, what) {}
};

class InsufficientSuffix : public Error {
 public:
  explicit InsufficientSuffix(const std::string& what)
      : Error(ErrorCode::InsufficientSuffix, what) {}
};

class NoCandidates : public Error {
 public:
  explicit NoCandidates(const std::string& what)
      : Error(ErrorCode::NoCandidates, what) {}
};

}  // namespace linthresh

#pragma once

#include <stdexcept>
#include <string>

namespace fstefan {

enum class ErrorCode {
  InvalidParameter,
  NonConvergent,
  PoleError,
  Overflow,
  NoSignChange,
  MaxIterations,
  OutOfDomain,
  NeedsMoreGrid,
  ExtrapolationUnstable,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// CLI maps codes onto process exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MaxIterations: return "MaxIterations";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NeedsMoreGrid: return "NeedsMoreGrid";
    case ErrorCode::ExtrapolationUnstable: return "ExtrapolationUnstable";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace fstefan

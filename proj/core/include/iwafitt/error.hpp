#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwafitt {

enum class ErrorCode {
  InsufficientPrecision,
  PrecisionOverflow,
  RingMismatch,
  NotTorsion,
  NotASquare,
  SupportCollision,
  UnfactoredResidual,
  EmptyStratum,
  ParityMismatch,
  PoolExhausted,
  NotMonotone,
  NoStabilization,
  InputError,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::PrecisionOverflow: return "PrecisionOverflow";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotTorsion: return "NotTorsion";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::SupportCollision: return "SupportCollision";
    case ErrorCode::UnfactoredResidual: return "UnfactoredResidual";
    case ErrorCode::EmptyStratum: return "EmptyStratum";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::PoolExhausted: return "PoolExhausted";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::InputError: return "InputError";
  }
  return "Unknown";
}

/// Every library failure carries one of the codes above; the CLI maps them
/// to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace iwafitt

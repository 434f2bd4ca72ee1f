#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace baconf {

enum class ErrorKind {
  InvalidArgument,
  NonSquarefree,
  NoConvergence,
  DegenerateConfiguration,
  Collinear,
  Collision,
  RecurrenceBreakdown,
  MissingExactData,
  IllConditioned,
  TailMismatch,
  OutOfRange,
  InvalidOrder,
  IdentityFailed,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonSquarefree: return "NonSquarefree";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::Collinear: return "Collinear";
    case ErrorKind::Collision: return "CollisionError";
    case ErrorKind::RecurrenceBreakdown: return "RecurrenceBreakdown";
    case ErrorKind::MissingExactData: return "MissingExactData";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::TailMismatch: return "TailMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace baconf

#ifndef MCKAY_ERRORS_HPP_
#define MCKAY_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mckay {

enum class ErrorKind {
  MalformedPermutation,
  GroupTooLarge,
  NotASubgroup,
  NotNormal,
  NotPSolvable,
  ConductorOverflow,
  GroupMismatch,
  KernelViolation,
  FactorizationViolation,
  NotOverTheta,
  NotAnExtension,
  NotLinear,
  NoExtension,
  NotALift,
  AssertionFailure,
  BadRecord,
  InconsistentDegrees,
  BadFormat,
  CycleOutOfRange,
  ShapeMismatch,
  GroupUnavailable,
};

inline std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotPSolvable: return "NotPSolvable";
    case ErrorKind::ConductorOverflow: return "ConductorOverflow";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::KernelViolation: return "KernelViolation";
    case ErrorKind::FactorizationViolation: return "FactorizationViolation";
    case ErrorKind::NotOverTheta: return "NotOverTheta";
    case ErrorKind::NotAnExtension: return "NotAnExtension";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::NotALift: return "NotALift";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
    case ErrorKind::BadRecord: return "BadRecord";
    case ErrorKind::InconsistentDegrees: return "InconsistentDegrees";
    case ErrorKind::BadFormat: return "BadFormat";
    case ErrorKind::CycleOutOfRange: return "CycleOutOfRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::GroupUnavailable: return "GroupUnavailable";
  }
  return "Unknown";
}

//! Every failure raised by the library carries one of the ErrorKind tags so
//! callers (and the batch runner) can classify it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, std::string const& what) {
  throw Error(kind, what);
}

//! Runtime check of a fact the construction relies on.  The anchor names the
//! step of the argument whose claim failed.
inline void ensure(bool cond, std::string_view anchor,
                   std::string const& detail = {}) {
  if (!cond) {
    std::string msg(anchor);
    if (!detail.empty()) {
      msg += " (" + detail + ")";
    }
    throw Error(ErrorKind::AssertionFailure, msg);
  }
}

}  // namespace mckay

#endif  // MCKAY_ERRORS_HPP_

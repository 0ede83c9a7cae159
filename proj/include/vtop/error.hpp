#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vtop {

enum class ErrorKind {
  NotAPartialOrder,
  MissingJoin,
  MissingMeet,
  SizeLimitExceeded,
  OutOfRange,
  NotAssociative,
  UnitLawFails,
  JoinNotPreserved,
  BottomNotAbsorbing,
  InvalidMonoidTable,
  QuantaleMismatch,
  NotMonotone,
  LevelsInvalid,
  NotAMetric,
  NotFreeMonoidQuantale,
  CompositionFails,
  NotAVFunctor,
  PreconditionFailed,
  ParseError,
  ValidationError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::MissingJoin: return "MissingJoin";
    case ErrorKind::MissingMeet: return "MissingMeet";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::UnitLawFails: return "UnitLawFails";
    case ErrorKind::JoinNotPreserved: return "JoinNotPreserved";
    case ErrorKind::BottomNotAbsorbing: return "BottomNotAbsorbing";
    case ErrorKind::InvalidMonoidTable: return "InvalidMonoidTable";
    case ErrorKind::QuantaleMismatch: return "QuantaleMismatch";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::LevelsInvalid: return "LevelsInvalid";
    case ErrorKind::NotAMetric: return "NotAMetric";
    case ErrorKind::NotFreeMonoidQuantale: return "NotFreeMonoidQuantale";
    case ErrorKind::CompositionFails: return "CompositionFails";
    case ErrorKind::NotAVFunctor: return "NotAVFunctor";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness()` holds the indices
/// (elements, points, subset masks) that exhibit the violated law, in the
/// order documented by the throwing operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::size_t> witness = {})
      : std::runtime_error(compose(kind, message)),
        kind_(kind),
        detail_(std::move(message)),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  static std::string compose(ErrorKind kind, const std::string& message) {
    std::ostringstream os;
    os << to_string(kind) << ": " << message;
    return os.str();
  }

  ErrorKind kind_;
  std::string detail_;
  std::vector<std::size_t> witness_;
};

[[noreturn]] inline void size_limit(std::string_view what, std::size_t got, std::size_t cap) {
  std::ostringstream os;
  os << what << " is " << got << ", cap is " << cap;
  throw Error(ErrorKind::SizeLimitExceeded, os.str(), {got, cap});
}

}  // namespace vtop

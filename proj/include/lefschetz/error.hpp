#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lefschetz {

enum class ErrorKind {
  AmbientMismatch,
  ContainmentFailure,
  NonSquare,
  NotNilpotent,
  DimensionMismatch,
  RingMismatch,
  Inhomogeneous,
  NotArtinian,
  OutOfRange,
  NotSymmetric,
  NotUnimodal,
  InvalidProfile,
  NotDegreeOne,
  NoLinearForms,
  HypothesisViolation,
  NotGorenstein,
  NotFree,
  ResourceGuard,
  NonRegularSequence,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the
// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lefschetz

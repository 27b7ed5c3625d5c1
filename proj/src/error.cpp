#include "lefschetz/error.hpp"

#include <cctype>

#include "lefschetz/rational.hpp"

namespace lefschetz {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ContainmentFailure: return "ContainmentFailure";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::Inhomogeneous: return "Inhomogeneous";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotUnimodal: return "NotUnimodal";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::NotDegreeOne: return "NotDegreeOne";
    case ErrorKind::NoLinearForms: return "NoLinearForms";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::NotGorenstein: return "NotGorenstein";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::ResourceGuard: return "ResourceGuard";
    case ErrorKind::NonRegularSequence: return "NonRegularSequence";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::Parse, "malformed rational '" + text + "'");
  if (num.front() == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace lefschetz

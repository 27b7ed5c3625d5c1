#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lefschetz {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// "num" for integers, "num/den" otherwise; always lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "n" or "n/d" (optional sign); throws Error(Parse) on malformed input
/// or zero denominator.
Rational parse_rational(const std::string& text);

inline bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace lefschetz

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plumb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q" in lowest terms with the sign on the numerator,
/// or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign. Throws plumb::Error on
/// malformed text or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Decimal rendering with exactly `digits` fractional digits, rounded half away
/// from zero using integer arithmetic only (platform independent).
std::string format_fixed(const Rational& q, int digits);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace plumb

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace taut {

/// Exact rational number. GMP keeps every arithmetic result canonical
/// (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p" (optional leading sign). Throws ValidationError on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

Rational abs(const Rational& q);

/// 2^e for any integer e (negative exponents give 1/2^|e|).
Rational pow2(long e);

} // namespace taut

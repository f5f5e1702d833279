#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace densecvx {

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, gcd(|num|, den) = 1).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "num/den", "num", or a decimal literal such as "0.25".
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", including den == 1.
std::string format_rational(const Rational& value);

/// Exact conversion of a finite double (doubles are dyadic rationals).
Rational rational_from_double(double value);

/// 2^exponent for any integer exponent.
Rational pow2(long exponent);

Rational pow(const Rational& base, unsigned long exponent);

}  // namespace densecvx

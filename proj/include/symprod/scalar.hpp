#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symprod {

// Exact rational coefficients. GMP keeps values canonical after every
// arithmetic operation; values built from raw numerator/denominator pairs
// go through make_scalar.
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar make_scalar(long numerator, long denominator = 1);

// Parses "p" or "p/q" with optional leading sign. Throws ParseError.
Scalar parse_scalar(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q" with q > 0 and gcd 1.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace symprod

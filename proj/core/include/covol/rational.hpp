#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace covol {

// All exact arithmetic in the engine runs on GMP rationals.
using Rational = mpq_class;
using Integer = mpz_class;

// a^e for integer e (e may be negative; a must be nonzero then).
Rational pow_int(const Rational& a, long e);

Integer pow_int(const Integer& a, unsigned long e);

Integer factorial(unsigned long n);

// Parses a decimal literal ("29.534", "-8.2667", "4.66756e8") into the exact
// rational it denotes. Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(std::string_view s);

// One unit in the last printed place of the given decimal literal, e.g.
// "685.655" -> 1/1000, "8.57e13" -> 1e11.
Rational printed_ulp(std::string_view s);

// Scientific notation with the given number of significant digits, rounding
// to nearest. Exact for zero; never loses the sign.
std::string to_sci_string(const Rational& x, int sig_digits);

// Plain decimal expansion when the denominator is of the form 2^a 5^b,
// otherwise "num/den". Used for the certificate records.
std::string to_exact_string(const Rational& x);

// floor(x) as an Integer.
Integer floor_rational(const Rational& x);

}  // namespace covol

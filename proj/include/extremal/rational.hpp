#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace extremal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q", or a finite decimal such as "-2.5" or "1e-3" into an
/// exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q" (or "p" when q == 1).
std::string to_exact_string(const Rational& q);

/// Decimal expansion of q rounded half-away-from-zero to `significant`
/// significant digits, without exponent notation.
std::string to_decimal(const Rational& q, int significant);

/// Exact rational value of a finite double.
Rational from_double(double x);

inline double to_double(const Rational& q) { return q.get_d(); }

/// 10^e as an exact rational (e may be negative).
Rational pow10(long e);

/// Largest e with 10^e <= |q|; q must be nonzero.
long decimal_exponent(const Rational& q);

int sign(const Rational& q);

}  // namespace extremal

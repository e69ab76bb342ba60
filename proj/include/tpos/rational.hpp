#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tpos {

/// Exact rational scalar. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator; values built from raw parts must go
/// through make_rational() or parse_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Accepts "n", "-n", "n/d". Throws InputError on malformed text or d = 0.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "2/1", "-3/4".
std::string to_fraction_string(const Rational& q);

/// Shortest readable form: "2", "-3/4".
std::string to_display_string(const Rational& q);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double x);

inline int sign(const Rational& q) { return sgn(q); }

} // namespace tpos

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tilescope {

/// Exact rational scalar. gmpxx keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from raw parts must go through
/// make_rational() so the invariant also holds for parsed input.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or "p" (optional sign on p). Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "p/q", even for integers ("3/1"), so files never mix forms.
std::string to_string(const Rational& r);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace tilescope

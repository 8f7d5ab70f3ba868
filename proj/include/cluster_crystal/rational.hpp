#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cluster_crystal {

// GMP keeps mpq_class canonical after every arithmetic operation, so
// equality is plain structural comparison.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading minus).  A zero denominator or
/// stray characters raise UsageError.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms; DomainError when q = 0.
Rational ratio(long p, long q);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Integer power with negative exponents allowed.  0 to a negative power
/// raises DomainError("division_by_zero").
Rational power(const Rational& base, long exponent);

/// Exact conversion to a long; DomainError when the value is not an integer
/// or does not fit.
long to_integer(const Rational& value);

}  // namespace cluster_crystal

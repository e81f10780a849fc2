#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ellgen {

using Integer = mpz_class;
/// Arbitrary-precision rational, always kept reduced with a positive denominator.
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws std::invalid_argument on anything else
/// (decimal points and exponents are rejected).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);

/// Generalized binomial coefficient C(n, k) for integer n (possibly negative).
Rational binomial(long n, long k);

}  // namespace ellgen

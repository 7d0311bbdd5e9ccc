#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sgo {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "-12", "3.25", "1e-3" or "-2.5E+2" exactly. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced fraction, "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Advisory decimal rendering with `digits` significant digits, rounded
/// half-to-even. Plain notation for moderate exponents, scientific otherwise.
std::string to_decimal(const Rational& q, int digits = 20);

/// num / den in canonical form. Throws std::domain_error for den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer pow_int(const Integer& base, unsigned long exponent);
Rational pow_rat(const Rational& base, unsigned long exponent);

/// Smallest integer >= q.
Integer ceil(const Rational& q);

}  // namespace sgo

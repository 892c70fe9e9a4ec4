#pragma once

#include <gmpxx.h>

#include <string>

namespace cevian {

// All arithmetic in this library is exact. GMP keeps rationals canonical
// (reduced, positive denominator), which is exactly the invariant the rest
// of the code relies on for structural equality.
using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws ZeroDenominator when den = 0.
Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& r);

/// "num/den" in lowest terms, or plain "num" for integers.
std::string to_string(const Rational& r);

/// Decimal rendering with exactly `digits` fractional digits (round half up).
std::string to_decimal(const Rational& r, int digits);

}  // namespace cevian

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace peaklab {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);

// C(m, k) for any integer m (falling-factorial form), k >= 0.
Integer binomial(const Integer& m, unsigned long k);

bool is_integer(const Rational& r);

}  // namespace peaklab

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "hodge/errors.hpp"

namespace hodge {

// Exact arithmetic substrate. Every quantity computed by the library is an
// arbitrary-precision integer or a reduced fraction; no floating point enters
// any computation path. Fractions are always stored reduced with positive
// denominator. Decimal rendering below is display-only and is never fed back
// into a computation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Fractional part <a/b> = (a mod b)/b, with the representative of a mod b
// taken in [0, b). Requires b >= 1.
Rational frac_part(const Integer& a, const Integer& b);

// gcd(|a|, d) with the convention gcd(0, d) = d. Requires d >= 1. The result
// always divides d, so it never vanishes.
Integer gcd_with(const Integer& a, const Integer& d);

// Multinomial coefficient (sum k_i)! / prod(k_i!) for nonnegative parts.
// Computed as a product of binomials so every intermediate is an integer.
Integer multinomial(const std::vector<Integer>& parts);

bool is_odd_prime(const Integer& d);

// "num/den" when the denominator is not 1, plain "num" otherwise.
std::string to_fraction_string(const Rational& x);

// Accepts both forms emitted by to_fraction_string, plus unreduced input;
// the result is reduced. Denominator must be positive.
Rational rational_from_string(std::string_view s);

// Decimal expansion correctly rounded to `digits` significant digits,
// computed by exact integer long division. Uses fixed notation in a sane
// exponent window and scientific notation outside it.
std::string to_decimal_string(const Rational& x, int digits = 15);

} // namespace hodge

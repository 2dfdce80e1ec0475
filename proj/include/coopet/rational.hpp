#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace coopet {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision parts. Always stored canonically:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int k);

/// Builds num/den, normalizing the denominator sign. Throws std::invalid_argument
/// on a zero denominator.
Rational make_rational(BigInt num, BigInt den);

/// Renders "p/q", or just "p" when the value is an integer.
std::string format_rational(const Rational& r);

/// Strict inverse of format_rational: optional leading '-', digits, optional
/// "/digits". Throws std::invalid_argument on anything else (including q = 0).
Rational parse_fraction(std::string_view text);

}  // namespace coopet

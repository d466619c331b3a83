#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace arithmat {

/// Arbitrary-precision signed integer used for every exact computation.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number (always stored in lowest terms).
using Rational = boost::multiprecision::cpp_rational;

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

/// Floor division, rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

/// Least nonnegative residue of a modulo b (b > 0).
Integer mod_floor(const Integer& a, const Integer& b);

std::string to_string(const Integer& value);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

}  // namespace arithmat

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fracterm {

/// Unbounded signed integer used wherever the calculus needs exact counts.
using Integer = boost::multiprecision::cpp_int;

/// Parses an optionally signed run of decimal digits. Leading zeroes are allowed.
Integer parse_integer(std::string_view text);

std::string to_decimal(const Integer& value);

Integer abs(const Integer& value);
Integer gcd(const Integer& a, const Integer& b);

/// -1, 0 or 1.
int sign(const Integer& value);

}  // namespace fracterm

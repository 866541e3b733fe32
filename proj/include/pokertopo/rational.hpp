#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pokertopo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);

/// Decimal rendering with a fixed number of digits after the point (rounded half up).
std::string to_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

/// Accepts "3/4", "-2", "0.50007".
Rational parse_rational(std::string_view s);

}  // namespace pokertopo

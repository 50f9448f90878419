#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cube {

// All measures, aggregates, thresholds and rates are exact rationals.
// Border membership must never depend on floating-point rounding.
using Rational = boost::multiprecision::cpp_rational;

// Parses "4", "-2", "2.5" (exact base-10), or "1/3". Throws
// std::invalid_argument on anything else (callers wrap with context).
Rational parse_rational(const std::string& text);

// "4" when the denominator is 1, otherwise "a/b" in lowest terms.
std::string format_rational(const Rational& value);

}  // namespace cube

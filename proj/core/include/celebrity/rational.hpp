#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace celebrity {

// All weight and cost arithmetic is exact. Several structural results hinge
// on strict vs non-strict comparisons (alpha = w_u tie cases), so nothing in
// the engine ever rounds.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" with a positive integer q, a plain integer, or a decimal with
// at most nine fractional digits (converted exactly). Throws ParseError.
Rational parse_rational(const std::string& text);

// Renders as "p/q" with q >= 1, e.g. "3/2", "-1/4", "6/1". Never decimals.
std::string format_rational(const Rational& value);

}  // namespace celebrity

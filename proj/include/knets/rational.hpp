#ifndef KNETS_RATIONAL_HPP
#define KNETS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace knets {

// Arbitrary-precision rationals; always in lowest terms with positive
// denominator (cpp_rational maintains this invariant itself).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-'; throws Error(ParseError)
// on malformed input or zero denominator.
Rational rational_from_string(std::string_view s);

// Exact square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

} // namespace knets

#endif

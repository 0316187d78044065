#pragma once

// Exact rational scalars used throughout the library.

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace difflab {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "p/q" or a plain decimal such as "-0.25" into an exact value.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace difflab

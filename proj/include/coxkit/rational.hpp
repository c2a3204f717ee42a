#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace coxkit {

/// Arbitrary-precision integer used throughout the exact-arithmetic core.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; every arithmetic operation is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p" (denominator 1) or "p/q".
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" with optional sign; q must be positive after
/// normalization. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace coxkit

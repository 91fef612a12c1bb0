#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace axial {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced (gcd(num, den) = 1, den > 0);
/// the backing type maintains that invariant on every operation.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" with an optional leading minus. Rejects everything
/// else: whitespace, '+' signs, empty parts, zero denominators.
Rational parse_rational(std::string_view text);

/// Renders reduced form: "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& value);

} // namespace axial

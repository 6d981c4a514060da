// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lamlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-1.25", "2.5e-3" or "7/8" exactly. Throws ParameterError.
Rational parse_rational(std::string_view text);

/// Exact value of a binary64 number.
Rational rational_from_double(double value);

double to_double(const Rational& r);

/// Decimal text when the value has a terminating expansion, "p/q" otherwise.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

} // namespace lamlab

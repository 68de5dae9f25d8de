#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);
Integer binomial(int n, int k);

/// "p/q" with q >= 1; integers are written "p/1".
std::string rational_to_string(const Rational& r);
/// Accepts "p/q" or "p".
Rational rational_from_string(const std::string& text);

}  // namespace zb

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rhc {

// Exact rationals for thresholds and reported ratios. Never compared in
// floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "a", "a/b", "-a/b" and plain decimals; "0.15" reads as 3/20.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

BigInt ceil(const Rational& r);
BigInt floor(const Rational& r);

// Integer power with a signed exponent.
Rational pow(const Rational& base, int exponent);

// Falling factorial n (n-1) ... (n-r+1).
BigInt falling(std::int64_t n, std::int64_t r);

std::int64_t to_int64(const BigInt& v);

} // namespace rhc

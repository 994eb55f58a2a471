#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace pantsgraph {

// Arbitrary-precision signed integer. Mediant iteration and matrix words grow
// entries exponentially, so fixed-width arithmetic is not an option here.
using BigInt = boost::multiprecision::cpp_int;

struct XgcdResult {
  BigInt g;  // gcd(a, b) >= 0
  BigInt x;  // a*x + b*y == g
  BigInt y;
};

XgcdResult xgcd(BigInt a, BigInt b);

/// Floor division a/b for b > 0 (rounds toward -infinity).
BigInt floor_div(const BigInt& a, const BigInt& b);

double to_double(const BigInt& v);

/// Narrowing conversion; throws std::overflow_error when v does not fit.
std::int64_t to_int64(const BigInt& v);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

}  // namespace pantsgraph

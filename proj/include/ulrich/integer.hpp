#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ulrich {

/// Arbitrary-precision signed integer used for every lattice quantity.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& v);

/// True when v is a perfect square (v >= 0).
bool is_square(const Integer& v);

/// Floor division rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

/// Ceiling division.
Integer ceil_div(const Integer& a, const Integer& b);

/// Exact test of  a >= c * sqrt(s)  for integers a, c >= 0, s >= 0.
bool ge_scaled_sqrt(const Integer& a, const Integer& c, const Integer& s);

/// Exact test of  a < c * sqrt(s)  for integers a, c >= 0, s >= 0.
inline bool lt_scaled_sqrt(const Integer& a, const Integer& c, const Integer& s) {
    return !ge_scaled_sqrt(a, c, s);
}

/// Narrowing conversion; throws std::overflow_error when v does not fit.
std::int64_t to_int64(const Integer& v);

/// Binomial coefficient C(n, k) with C(n, k) = 0 outside 0 <= k <= n.
Integer binomial(const Integer& n, const Integer& k);

}  // namespace ulrich

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pretzel {

// Exact integer coefficients. Fibonacci numbers (and hence polynomial
// coefficients) grow exponentially in the twist parameters, so all
// coefficient arithmetic is arbitrary precision.
using Integer = boost::multiprecision::cpp_int;

inline int sgn(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Fibonacci numbers on all of Z: F(0) = 0, F(1) = 1,
// F(n+2) = F(n+1) + F(n), and F(-n) = (-1)^(n+1) F(n) for n > 0.
Integer fibonacci(long long n);

// The coefficient of the lowest v-power of the two-twist pretzel
// specialization, F(p+q+1) + F(p+1)*F(q+1). Requires p, q odd and not
// equal to +-1; nonzero under those preconditions.
Integer pretzel_low_coefficient(long long p, long long q);

} // namespace pretzel

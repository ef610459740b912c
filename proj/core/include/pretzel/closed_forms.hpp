#pragma once

#include <optional>
#include <utility>

#include "pretzel/braid.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

// The z=1 Homflypt specialization of a pretzel knot together with the data
// the braid-index bound is read from: its v-span, the resulting lower bound
// (span.hi - span.lo)/2 + 1, and for r > 0 the two-summand decomposition
// whose extreme terms realize the span.
struct SpanCertificate {
    LaurentPoly1 qprime;
    VSpan span;
    int lower_bound = 1;
    std::optional<std::pair<LaurentPoly1, LaurentPoly1>> decomposition;
};

// Q of the (2,n) torus link at z=1: F(n+1) v^(n-1) - F(n-1) v^(n+1) with
// extended Fibonacci numbers, valid for every integer n. T(2,0) is the
// two-component unlink (v^-1 - v), T(2,+-1) the unknot (1).
LaurentPoly1 torus2_z1(long long n);

// The z=1 Homflypt of P(p, q, -2r) in closed form. For r > 0 it is A + B
// with A = (v + v^3 + ... + v^(2r-1)) * torus2_z1(p+q) and
// B = v^(2r) * torus2_z1(p) * torus2_z1(q); for r < 0 the mirror image is
// computed and v is inverted (knot polynomials have only even v-exponents,
// so this is the z=1 mirror rule).
SpanCertificate pretzel_z1_certificate(const PretzelParams& params);

// Braid-index lower bound from a v-span: ceil((hi - lo + 2) / 2).
int mfw_lower_bound(const VSpan& span);

} // namespace pretzel

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pretzel/skein.hpp"

namespace pretzel {

struct VerifyOptions {
    int max_crossings = 24;
    std::uint64_t max_nodes = 20'000'000;

    HomflyBudget budget() const { return {max_crossings, max_nodes}; }
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long long checks = 0;
    long long skipped = 0;      // grid points over the crossing budget
    std::string detail;         // first counterexample, empty when passed
};

// Cross-verification suites. Each one runs a family of exact checks and
// stops at the first counterexample, reporting it in full.

// Closed form vs. skein oracle for the (2,n) torus closures, |n| <= 10.
SuiteResult suite_torus_oracle(const VerifyOptions& opts, SkeinCache& cache);
// Closed form vs. skein oracle on the pretzel grid |p|,|q| <= 7, |r| <= 3;
// also certifies that the emitted braid's closure is the named pretzel.
SuiteResult suite_pretzel_oracle(const VerifyOptions& opts, SkeinCache& cache);
// Braid-index certificate on the grid |p|,|q| <= 11, |r| <= 5: the span
// bound meets the strand count, and spans match the closed-form values.
SuiteResult suite_span(const VerifyOptions& opts);
// Quasipositivity decision on the same grid: the sign criterion, verified
// witnesses on every yes, and a sound obstruction on every no.
SuiteResult suite_quasipositivity(const VerifyOptions& opts);
// Nonvanishing of the lowest r=1 coefficient for |p|,|q| <= 25, and its
// agreement with the closed-form polynomial.
SuiteResult suite_low_coefficient(const VerifyOptions& opts);
// Writhe formula p+q+r+sgn(r) and knot-ness of the closure on the grid
// |p|,|q| <= 15, |r| <= 6.
SuiteResult suite_writhe(const VerifyOptions& opts);
// Skein relation at every crossing of 200 pseudorandom braid closures with
// at most 12 crossings, plus both Morton-Franks-Williams inequalities for
// the knots among them.
SuiteResult suite_skein_relation(const VerifyOptions& opts, SkeinCache& cache);
// Named spot checks: the P(5,-3,-2) verdicts, the P(5,-3,-6) braid word,
// and the two squeezedness edge cases.
SuiteResult suite_spot_checks(const VerifyOptions& opts);
// Multiplicativity under connected sum and the v -> v^-1 mirror rule,
// oracle against oracle, on ten instances each.
SuiteResult suite_sum_and_mirror(const VerifyOptions& opts, SkeinCache& cache);

// All suites in fixed order, sharing one cache.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts, SkeinCache& cache);

} // namespace pretzel

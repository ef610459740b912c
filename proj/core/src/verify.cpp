#include "pretzel/verify.hpp"

#include <cstdlib>
#include <random>

#include "pretzel/classify.hpp"
#include "pretzel/closed_forms.hpp"
#include "pretzel/integers.hpp"

namespace pretzel {

namespace {

std::vector<long long> odd_values(long long bound) {
    std::vector<long long> vals;
    for (long long v = -bound; v <= bound; ++v)
        if (v % 2 != 0 && v != 1 && v != -1) vals.push_back(v);
    return vals;
}

std::vector<long long> nonzero_values(long long bound) {
    std::vector<long long> vals;
    for (long long v = -bound; v <= bound; ++v)
        if (v != 0) vals.push_back(v);
    return vals;
}

std::string params_text(const PretzelParams& params) {
    return "(p=" + std::to_string(params.p) + ", q=" + std::to_string(params.q) +
           ", r=" + std::to_string(params.r) + ")";
}

} // namespace

SuiteResult suite_torus_oracle(const VerifyOptions& opts, SkeinCache& cache) {
    SuiteResult res;
    res.name = "torus-oracle";
    long long n_max = std::min<long long>(10, opts.max_crossings);
    for (long long n = -n_max; n <= n_max; ++n) {
        std::vector<int> letters(static_cast<size_t>(std::llabs(n)), n >= 0 ? 1 : -1);
        BraidWord word(2, std::move(letters));
        LaurentPoly1 closed = torus2_z1(n);
        LaurentPoly1 oracle = specialize_z1(homfly(word, cache, opts.budget()));
        ++res.checks;
        if (closed != oracle) {
            res.passed = false;
            res.detail = "n=" + std::to_string(n) + ": closed form " + to_text(closed) +
                         " vs oracle " + to_text(oracle);
            return res;
        }
    }
    return res;
}

SuiteResult suite_pretzel_oracle(const VerifyOptions& opts, SkeinCache& cache) {
    SuiteResult res;
    res.name = "pretzel-oracle";
    for (long long p : odd_values(7)) {
        for (long long q : odd_values(7)) {
            for (long long r : nonzero_values(3)) {
                PretzelParams params{p, q, r};
                BraidWord word = pretzel_braid(params);
                if (static_cast<int>(word.size()) > opts.max_crossings) {
                    ++res.skipped;
                    continue;
                }
                LaurentPoly1 closed = pretzel_z1_certificate(params).qprime;
                LaurentPoly1 oracle = specialize_z1(homfly(word, cache, opts.budget()));
                ++res.checks;
                if (closed != oracle) {
                    res.passed = false;
                    res.detail = params_text(params) + ": closed form " + to_text(closed) +
                                 " vs oracle " + to_text(oracle);
                    return res;
                }
            }
        }
    }
    return res;
}

SuiteResult suite_span(const VerifyOptions&) {
    SuiteResult res;
    res.name = "span";
    for (long long p : odd_values(11)) {
        for (long long q : odd_values(11)) {
            for (long long r : nonzero_values(5)) {
                PretzelParams params{p, q, r};
                SpanCertificate cert = pretzel_z1_certificate(params);
                int expected_index = static_cast<int>(std::llabs(r)) + 2;
                VSpan expected_span =
                    r > 0 ? VSpan{static_cast<int>(p + q), static_cast<int>(p + q + 2 * r + 2)}
                          : VSpan{static_cast<int>(p + q + 2 * r - 2), static_cast<int>(p + q)};
                ++res.checks;
                if (cert.lower_bound != expected_index ||
                    pretzel_braid(params).strands() != expected_index ||
                    cert.span != expected_span) {
                    res.passed = false;
                    res.detail = params_text(params) + ": span (" + std::to_string(cert.span.lo) +
                                 "," + std::to_string(cert.span.hi) + ") bound " +
                                 std::to_string(cert.lower_bound) + ", expected index " +
                                 std::to_string(expected_index) + "; qprime " +
                                 to_text(cert.qprime);
                    return res;
                }
            }
        }
    }
    return res;
}

SuiteResult suite_quasipositivity(const VerifyOptions&) {
    SuiteResult res;
    res.name = "quasipositivity";
    for (long long p : odd_values(11)) {
        for (long long q : odd_values(11)) {
            for (long long r : nonzero_values(5)) {
                PretzelParams params{p, q, r};
                QuasipositivityResult qp = is_quasipositive(params);
                bool expected = p + q >= 0 && r > 0;
                bool ok = qp.verdict == (expected ? Verdict::Yes : Verdict::No);
                if (ok && expected)
                    ok = qp.witness && verify_factorization(*qp.witness, pretzel_braid(params));
                if (ok && !expected) {
                    ok = qp.obstruction.has_value() && !qp.obstruction->consistent;
                    if (ok && !qp.obstruction->s3_two_values.empty()) {
                        for (long long s : qp.obstruction->s3_two_values)
                            if (s == qp.obstruction->predicted_two_phi) ok = false;
                    }
                }
                ++res.checks;
                if (!ok) {
                    res.passed = false;
                    res.detail = params_text(params) + ": verdict " + verdict_text(qp.verdict) +
                                 (expected ? ", expected yes with verified witness"
                                           : ", expected no with sound obstruction");
                    return res;
                }
            }
        }
    }
    return res;
}

SuiteResult suite_low_coefficient(const VerifyOptions&) {
    SuiteResult res;
    res.name = "low-coefficient";
    for (long long p : odd_values(25)) {
        for (long long q : odd_values(25)) {
            Integer x = pretzel_low_coefficient(p, q);
            SpanCertificate cert = pretzel_z1_certificate({p, q, 1});
            Integer low = cert.qprime.coefficient({static_cast<int>(p + q)});
            ++res.checks;
            if (x == 0 || x != low) {
                res.passed = false;
                res.detail = "(p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                             "): low coefficient " + x.str() + " vs polynomial term " +
                             low.str() + " in " + to_text(cert.qprime);
                return res;
            }
        }
    }
    return res;
}

SuiteResult suite_writhe(const VerifyOptions&) {
    SuiteResult res;
    res.name = "writhe";
    for (long long p : odd_values(15)) {
        for (long long q : odd_values(15)) {
            for (long long r : nonzero_values(6)) {
                PretzelParams params{p, q, r};
                BraidWord word = pretzel_braid(params);
                long long expected = p + q + r + sgn(r);
                ++res.checks;
                if (writhe(word) != expected || closure_components(word) != 1) {
                    res.passed = false;
                    res.detail = params_text(params) + ": writhe " +
                                 std::to_string(writhe(word)) + " expected " +
                                 std::to_string(expected) + ", components " +
                                 std::to_string(closure_components(word));
                    return res;
                }
            }
        }
    }
    return res;
}

SuiteResult suite_skein_relation(const VerifyOptions& opts, SkeinCache& cache) {
    SuiteResult res;
    res.name = "skein-relation";
    std::mt19937 rng(20240803u);
    int cap = std::min(12, opts.max_crossings);
    for (int trial = 0; trial < 200; ++trial) {
        int strands = 2 + static_cast<int>(rng() % 4);
        int length = 3 + static_cast<int>(rng() % 10);
        if (length > cap) length = cap;
        std::vector<int> letters;
        for (int i = 0; i < length; ++i) {
            int idx = 1 + static_cast<int>(rng() % (strands - 1));
            letters.push_back(rng() % 2 == 0 ? idx : -idx);
        }
        BraidWord word(strands, std::move(letters));
        LinkDiagram d = braid_closure(word);
        for (int c = 0; c < static_cast<int>(d.crossings().size()); ++c) {
            ++res.checks;
            if (!skein_check(d, c, &cache, opts.budget())) {
                res.passed = false;
                res.detail = "word [" + signed_text(word) + "] on " + std::to_string(strands) +
                             " strands: skein relation failed at crossing " + std::to_string(c);
                return res;
            }
        }
        if (closure_components(word) == 1) {
            LaurentPoly2 q = homfly(d, cache, opts.budget());
            VSpan span = v_span(q);
            long long w = writhe(word);
            ++res.checks;
            if (!(1 + w - strands <= span.lo && span.hi <= -1 + w + strands)) {
                res.passed = false;
                res.detail = "word [" + signed_text(word) + "] on " + std::to_string(strands) +
                             " strands: span (" + std::to_string(span.lo) + "," +
                             std::to_string(span.hi) + ") outside [" +
                             std::to_string(1 + w - strands) + "," +
                             std::to_string(-1 + w + strands) + "]; Q = " + to_text(q);
                return res;
            }
        }
    }
    return res;
}

SuiteResult suite_spot_checks(const VerifyOptions&) {
    SuiteResult res;
    res.name = "spot-checks";
    auto fail = [&](const std::string& what) {
        res.passed = false;
        res.detail = what;
        return res;
    };

    ClassificationReport rep = classify({5, -3, 1});
    ++res.checks;
    if (rep.verdicts.quasipositive != Verdict::Yes ||
        rep.verdicts.strongly_quasipositive != Verdict::No)
        return fail("P(5,-3,-2): expected quasipositive yes, strongly quasipositive no");

    ++res.checks;
    if (signed_text(pretzel_braid({5, -3, 3})) != "1 1 1 1 1 2 -1 -1 -1 -4 -3 2 3 4 4 3")
        return fail("P(5,-3,-6) braid word mismatch: got " +
                    signed_text(pretzel_braid({5, -3, 3})));

    ++res.checks;
    if (squeezed_status({5, -3, -1}) != Verdict::No)
        return fail("P(5,-3,2): expected squeezed no");
    ++res.checks;
    if (squeezed_status({5, -3, -2}) != Verdict::Unknown)
        return fail("P(5,-3,4): expected squeezed unknown");
    return res;
}

SuiteResult suite_sum_and_mirror(const VerifyOptions& opts, SkeinCache& cache) {
    SuiteResult res;
    res.name = "sum-and-mirror";
    BraidWord trefoil(2, {1, 1, 1});
    BraidWord trefoil_m(2, {-1, -1, -1});
    BraidWord t25(2, {1, 1, 1, 1, 1});
    BraidWord t27(2, {1, 1, 1, 1, 1, 1, 1});
    BraidWord fig8(3, {1, -2, 1, -2});
    std::vector<std::pair<BraidWord, BraidWord>> pairs = {
        {trefoil, trefoil}, {trefoil, trefoil_m}, {trefoil, fig8},   {fig8, fig8},
        {trefoil, t25},     {trefoil_m, fig8},    {trefoil_m, trefoil_m},
        {t25, t25},         {t25, fig8},          {t27, trefoil}};
    auto z1 = [&](const BraidWord& w) { return specialize_z1(homfly(w, cache, opts.budget())); };
    for (const auto& [a, b] : pairs) {
        BraidWord sum = connected_sum(a, b);
        ++res.checks;
        if (closure_components(sum) != 1 || z1(sum) != z1(a) * z1(b)) {
            res.passed = false;
            res.detail = "connected sum [" + signed_text(a) + "] # [" + signed_text(b) +
                         "]: product " + to_text(z1(a) * z1(b)) + " vs sum " + to_text(z1(sum));
            return res;
        }
    }
    std::vector<BraidWord> knots = {trefoil,
                                    trefoil_m,
                                    t25,
                                    t27,
                                    fig8,
                                    BraidWord(2, {-1, -1, -1, -1, -1}),
                                    pretzel_braid({3, 3, 1}),
                                    pretzel_braid({5, -3, 1}),
                                    pretzel_braid({3, -5, 1}),
                                    pretzel_braid({3, 5, -1})};
    for (const BraidWord& k : knots) {
        ++res.checks;
        if (z1(mirror(k)) != invert_v(z1(k))) {
            res.passed = false;
            res.detail = "mirror rule failed for [" + signed_text(k) + "]: mirror " +
                         to_text(z1(mirror(k))) + " vs v-inverted " + to_text(invert_v(z1(k)));
            return res;
        }
    }
    return res;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts, SkeinCache& cache) {
    return {suite_torus_oracle(opts, cache),
            suite_pretzel_oracle(opts, cache),
            suite_span(opts),
            suite_quasipositivity(opts),
            suite_low_coefficient(opts),
            suite_writhe(opts),
            suite_skein_relation(opts, cache),
            suite_spot_checks(opts),
            suite_sum_and_mirror(opts, cache)};
}

} // namespace pretzel

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretzel/braid.hpp"
#include "pretzel/closed_forms.hpp"

namespace pretzel {

// Proven verdicts are yes/no; slice status is only conjectured in either
// direction, and squeezedness has a genuinely open case.
enum class Verdict { Yes, No, ConjecturalYes, ConjecturalNo, Unknown };

std::string verdict_text(Verdict v);
Verdict verdict_from_text(const std::string& text);

// Why a knot cannot be quasipositive. A quasipositive knot with braid index
// b and minimal-braid writhe w has every slice-torus invariant equal to
// (1 + w - b)/2. The report compares that prediction against the cited
// two-element value sets of the sl3 concordance invariant (never computed
// here), or against nonnegativity when the writhe is already negative.
struct QPObstruction {
    std::string case_label;
    long long w = 0;
    int b = 0;
    long long predicted_two_phi = 0;           // 1 + w - b
    std::vector<long long> s3_two_values;      // cited; empty in the negative-writhe case
    bool consistent = false;                    // prediction survives the comparison

    bool operator==(const QPObstruction&) const = default;
};

struct Verdicts {
    Verdict quasipositive = Verdict::Unknown;
    Verdict quasinegative = Verdict::Unknown;
    Verdict strongly_quasipositive = Verdict::Unknown;
    Verdict positive = Verdict::Unknown;
    Verdict braid_positive = Verdict::Unknown;
    Verdict alternating = Verdict::Unknown;
    Verdict quasi_alternating = Verdict::Unknown;
    Verdict fibered = Verdict::Unknown;
    Verdict slice = Verdict::Unknown;
    Verdict squeezed = Verdict::Unknown;

    bool operator==(const Verdicts&) const = default;
};

struct Witnesses {
    std::optional<BandFactorization> quasipositive;
    std::optional<BandFactorization> strongly_quasipositive;
    // Positive-braid presentation a_2^p a_1 a_2^q a_1, recorded when p, q > 0
    // and r = 1. Its closure agrees with the emitted minimal braid's closure.
    std::optional<BraidWord> braid_positive_word;
};

struct ClassificationReport {
    PretzelParams params;
    int braid_index = 0;
    BraidWord minimal_braid;
    long long writhe = 0;
    SpanCertificate certificate;
    Verdicts verdicts;
    Witnesses witnesses;
    std::optional<QPObstruction> obstruction;
};

struct BraidIndexResult {
    int index = 0;
    BraidWord braid;
    SpanCertificate certificate;
};

// The braid index |r| + 2, realized by pretzel_braid(params): the span
// certificate's lower bound meets the strand count, so equality is
// certified rather than bounded.
BraidIndexResult braid_index(const PretzelParams& params);

struct QuasipositivityResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<BandFactorization> witness;
    std::optional<QPObstruction> obstruction;
};

// Quasipositive exactly when p+q >= 0 and r > 0; a yes carries a verified
// factorization, a no carries the slice-torus obstruction for its case.
QuasipositivityResult is_quasipositive(const PretzelParams& params);

struct PositivityLadder {
    Verdict strongly_quasipositive = Verdict::Unknown;
    Verdict positive = Verdict::Unknown;
    Verdict braid_positive = Verdict::Unknown;
    std::optional<BandFactorization> witness;
    std::optional<BraidWord> braid_positive_word;
};

// Strong quasipositivity and positivity coincide here (p, q, r all
// positive); braid positivity additionally needs r = 1.
PositivityLadder positivity_ladder(const PretzelParams& params);

struct DiagramProperties {
    Verdict alternating = Verdict::Unknown;
    Verdict quasi_alternating = Verdict::Unknown;
    Verdict fibered = Verdict::Unknown;
    Verdict slice = Verdict::Unknown;
};

// Sign conditions on (p, q, r): alternating iff p, q, -r share a sign;
// quasi-alternating iff alternating or {p+q, p-2r, q-2r} contains both a
// negative and a positive number; fibered iff p, q have opposite signs or
// |r| = 1; slice conjecturally iff p + q = 0.
DiagramProperties diagram_properties(const PretzelParams& params);

// Squeezed unless sgn(p+q) = -sgn(r) and sgn(p) = -sgn(q); within that
// family, not squeezed when sgn(p-2r) = -sgn(q-2r) and open otherwise.
// sgn(0) is distinct from +-1, so p+q = 0 always lands in the squeezed
// branch.
Verdict squeezed_status(const PretzelParams& params);

// Full report; the result always satisfies the implication chain
// braid_positive => positive => strongly_quasipositive => quasipositive,
// alternating => quasi_alternating, and (quasipositive or quasinegative)
// => squeezed.
ClassificationReport classify(const PretzelParams& params);

} // namespace pretzel

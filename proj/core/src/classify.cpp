#include "pretzel/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "pretzel/integers.hpp"

namespace pretzel {

std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::ConjecturalYes: return "conjectural-yes";
        case Verdict::ConjecturalNo: return "conjectural-no";
        case Verdict::Unknown: return "unknown";
    }
    throw std::logic_error("bad verdict");
}

Verdict verdict_from_text(const std::string& text) {
    if (text == "yes") return Verdict::Yes;
    if (text == "no") return Verdict::No;
    if (text == "conjectural-yes") return Verdict::ConjecturalYes;
    if (text == "conjectural-no") return Verdict::ConjecturalNo;
    if (text == "unknown") return Verdict::Unknown;
    throw ParameterError("unknown verdict '" + text + "'");
}

BraidIndexResult braid_index(const PretzelParams& params) {
    params.validate();
    BraidIndexResult result;
    result.braid = pretzel_braid(params);
    result.certificate = pretzel_z1_certificate(params);
    result.index = static_cast<int>(std::llabs(params.r)) + 2;
    if (result.certificate.lower_bound != result.index ||
        result.braid.strands() != result.index)
        throw std::logic_error("braid index certificate failed to meet the strand count");
    return result;
}

QuasipositivityResult is_quasipositive(const PretzelParams& params) {
    params.validate();
    QuasipositivityResult result;
    long long pq = params.p + params.q;
    if (pq >= 0 && params.r > 0) {
        result.verdict = Verdict::Yes;
        result.witness = quasipositive_witness(params);
        return result;
    }
    result.verdict = Verdict::No;
    QPObstruction obs;
    obs.w = writhe(pretzel_braid(params));
    obs.b = static_cast<int>(std::llabs(params.r)) + 2;
    obs.predicted_two_phi = 1 + obs.w - obs.b;
    if (params.r < 0 && pq <= 0) {
        obs.case_label = "p+q<=0,r<0";
        obs.consistent = obs.predicted_two_phi >= 0;
    } else if (params.r > 0) { // pq < 0
        obs.case_label = "p+q<0,r>0";
        obs.s3_two_values = {pq + 2, pq + 1};
    } else { // r < 0, pq > 0
        obs.case_label = "p+q>0,r<0";
        obs.s3_two_values = {pq - 2, pq - 1};
    }
    if (!obs.s3_two_values.empty())
        obs.consistent = std::find(obs.s3_two_values.begin(), obs.s3_two_values.end(),
                                   obs.predicted_two_phi) != obs.s3_two_values.end();
    result.obstruction = obs;
    return result;
}

PositivityLadder positivity_ladder(const PretzelParams& params) {
    params.validate();
    PositivityLadder ladder;
    bool sqp = params.p > 0 && params.q > 0 && params.r > 0;
    ladder.strongly_quasipositive = sqp ? Verdict::Yes : Verdict::No;
    ladder.positive = ladder.strongly_quasipositive;
    ladder.braid_positive =
        (params.p > 0 && params.q > 0 && params.r == 1) ? Verdict::Yes : Verdict::No;
    if (sqp) ladder.witness = strongly_quasipositive_witness(params);
    if (ladder.braid_positive == Verdict::Yes) {
        std::vector<int> letters;
        for (long long i = 0; i < params.p; ++i) letters.push_back(2);
        letters.push_back(1);
        for (long long i = 0; i < params.q; ++i) letters.push_back(2);
        letters.push_back(1);
        ladder.braid_positive_word = BraidWord(3, std::move(letters));
    }
    return ladder;
}

DiagramProperties diagram_properties(const PretzelParams& params) {
    params.validate();
    DiagramProperties props;
    int sp = sgn(params.p), sq = sgn(params.q), sr = sgn(params.r);
    bool alternating = sp == sq && sq == -sr;
    props.alternating = alternating ? Verdict::Yes : Verdict::No;
    long long triple[3] = {params.p + params.q, params.p - 2 * params.r,
                           params.q - 2 * params.r};
    bool has_neg = false, has_pos = false;
    for (long long x : triple) {
        has_neg = has_neg || x < 0;
        has_pos = has_pos || x > 0;
    }
    props.quasi_alternating = (alternating || (has_neg && has_pos)) ? Verdict::Yes : Verdict::No;
    props.fibered =
        (sp != sq || std::llabs(params.r) == 1) ? Verdict::Yes : Verdict::No;
    props.slice = params.p + params.q == 0 ? Verdict::ConjecturalYes : Verdict::ConjecturalNo;
    return props;
}

Verdict squeezed_status(const PretzelParams& params) {
    params.validate();
    bool exceptional = sgn(params.p + params.q) == -sgn(params.r) &&
                       sgn(params.p) == -sgn(params.q);
    if (!exceptional) return Verdict::Yes;
    // p - 2r and q - 2r are odd, hence never zero.
    if (sgn(params.p - 2 * params.r) == -sgn(params.q - 2 * params.r)) return Verdict::No;
    return Verdict::Unknown;
}

namespace {

bool implies(Verdict a, Verdict b) { return a != Verdict::Yes || b == Verdict::Yes; }

void check_implications(const ClassificationReport& rep) {
    const Verdicts& v = rep.verdicts;
    bool ok = implies(v.braid_positive, v.positive) &&
              implies(v.positive, v.strongly_quasipositive) &&
              implies(v.strongly_quasipositive, v.quasipositive) &&
              implies(v.alternating, v.quasi_alternating) &&
              implies(v.quasipositive, v.squeezed) && implies(v.quasinegative, v.squeezed);
    if (!ok) throw std::logic_error("classification implication chain violated");
}

} // namespace

ClassificationReport classify(const PretzelParams& params) {
    params.validate();
    ClassificationReport rep;
    rep.params = params;
    BraidIndexResult bi = braid_index(params);
    rep.braid_index = bi.index;
    rep.minimal_braid = bi.braid;
    rep.writhe = writhe(bi.braid);
    rep.certificate = bi.certificate;

    QuasipositivityResult qp = is_quasipositive(params);
    rep.verdicts.quasipositive = qp.verdict;
    rep.witnesses.quasipositive = qp.witness;
    rep.obstruction = qp.obstruction;

    // Quasinegative means the mirror parameters are quasipositive.
    rep.verdicts.quasinegative =
        (params.p + params.q <= 0 && params.r < 0) ? Verdict::Yes : Verdict::No;

    PositivityLadder ladder = positivity_ladder(params);
    rep.verdicts.strongly_quasipositive = ladder.strongly_quasipositive;
    rep.verdicts.positive = ladder.positive;
    rep.verdicts.braid_positive = ladder.braid_positive;
    rep.witnesses.strongly_quasipositive = ladder.witness;
    rep.witnesses.braid_positive_word = ladder.braid_positive_word;

    DiagramProperties props = diagram_properties(params);
    rep.verdicts.alternating = props.alternating;
    rep.verdicts.quasi_alternating = props.quasi_alternating;
    rep.verdicts.fibered = props.fibered;
    rep.verdicts.slice = props.slice;
    rep.verdicts.squeezed = squeezed_status(params);

    check_implications(rep);
    return rep;
}

} // namespace pretzel

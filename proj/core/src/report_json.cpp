#include "pretzel/report_json.hpp"

#include "pretzel/errors.hpp"

namespace pretzel {

using nlohmann::ordered_json;

namespace {

ordered_json word_to_json(const BraidWord& word) {
    return {{"strands", word.strands()}, {"letters", word.letters()}};
}

BraidWord word_from_json(const ordered_json& j) {
    return BraidWord(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
}

ordered_json factorization_to_json(const BandFactorization& f) {
    ordered_json factors = ordered_json::array();
    for (const auto& factor : f.factors)
        factors.push_back(
            {{"conjugator", factor.conjugator.letters()}, {"generator", factor.generator}});
    return {{"kind", f.kind == BandFactorization::Kind::Quasipositive
                         ? "quasipositive"
                         : "strongly-quasipositive"},
            {"strands", f.strands},
            {"factors", std::move(factors)}};
}

BandFactorization factorization_from_json(const ordered_json& j) {
    BandFactorization f;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "quasipositive")
        f.kind = BandFactorization::Kind::Quasipositive;
    else if (kind == "strongly-quasipositive")
        f.kind = BandFactorization::Kind::StronglyQuasipositive;
    else
        throw ParameterError("unknown factorization kind '" + kind + "'");
    f.strands = j.at("strands").get<int>();
    for (const auto& factor : j.at("factors"))
        f.factors.push_back({BraidWord(f.strands, factor.at("conjugator").get<std::vector<int>>()),
                             factor.at("generator").get<int>()});
    return f;
}

ordered_json certificate_to_json(const SpanCertificate& cert) {
    ordered_json j{{"qprime", to_text(cert.qprime)},
                   {"span", {{"lo", cert.span.lo}, {"hi", cert.span.hi}}},
                   {"lower_bound", cert.lower_bound}};
    if (cert.decomposition)
        j["decomposition"] = {{"a", to_text(cert.decomposition->first)},
                              {"b", to_text(cert.decomposition->second)}};
    return j;
}

SpanCertificate certificate_from_json(const ordered_json& j) {
    SpanCertificate cert;
    cert.qprime = parse_poly1(j.at("qprime").get<std::string>());
    cert.span = {j.at("span").at("lo").get<int>(), j.at("span").at("hi").get<int>()};
    cert.lower_bound = j.at("lower_bound").get<int>();
    if (j.contains("decomposition"))
        cert.decomposition = {parse_poly1(j.at("decomposition").at("a").get<std::string>()),
                              parse_poly1(j.at("decomposition").at("b").get<std::string>())};
    return cert;
}

ordered_json obstruction_to_json(const QPObstruction& obs) {
    return {{"case", obs.case_label},
            {"w", obs.w},
            {"b", obs.b},
            {"predicted_two_phi", obs.predicted_two_phi},
            {"s3_two_values", obs.s3_two_values},
            {"consistent", obs.consistent}};
}

QPObstruction obstruction_from_json(const ordered_json& j) {
    QPObstruction obs;
    obs.case_label = j.at("case").get<std::string>();
    obs.w = j.at("w").get<long long>();
    obs.b = j.at("b").get<int>();
    obs.predicted_two_phi = j.at("predicted_two_phi").get<long long>();
    obs.s3_two_values = j.at("s3_two_values").get<std::vector<long long>>();
    obs.consistent = j.at("consistent").get<bool>();
    return obs;
}

} // namespace

ordered_json report_to_json(const ClassificationReport& report) {
    const Verdicts& v = report.verdicts;
    ordered_json j;
    j["schema_version"] = "1";
    j["params"] = {{"p", report.params.p}, {"q", report.params.q}, {"r", report.params.r}};
    j["braid_index"] = report.braid_index;
    j["minimal_braid"] = word_to_json(report.minimal_braid);
    j["writhe"] = report.writhe;
    j["verdicts"] = {{"quasipositive", verdict_text(v.quasipositive)},
                     {"quasinegative", verdict_text(v.quasinegative)},
                     {"strongly_quasipositive", verdict_text(v.strongly_quasipositive)},
                     {"positive", verdict_text(v.positive)},
                     {"braid_positive", verdict_text(v.braid_positive)},
                     {"alternating", verdict_text(v.alternating)},
                     {"quasi_alternating", verdict_text(v.quasi_alternating)},
                     {"fibered", verdict_text(v.fibered)},
                     {"slice", verdict_text(v.slice)},
                     {"squeezed", verdict_text(v.squeezed)}};
    j["span_certificate"] = certificate_to_json(report.certificate);
    ordered_json witnesses = ordered_json::object();
    if (report.witnesses.quasipositive)
        witnesses["quasipositive"] = factorization_to_json(*report.witnesses.quasipositive);
    if (report.witnesses.strongly_quasipositive)
        witnesses["strongly_quasipositive"] =
            factorization_to_json(*report.witnesses.strongly_quasipositive);
    if (report.witnesses.braid_positive_word)
        witnesses["braid_positive_word"] = word_to_json(*report.witnesses.braid_positive_word);
    if (!witnesses.empty()) j["witnesses"] = std::move(witnesses);
    if (report.obstruction) j["obstruction"] = obstruction_to_json(*report.obstruction);
    return j;
}

ClassificationReport report_from_json(const ordered_json& j) {
    if (j.at("schema_version").get<std::string>() != "1")
        throw ParameterError("unsupported report schema version");
    ClassificationReport rep;
    rep.params = {j.at("params").at("p").get<long long>(),
                  j.at("params").at("q").get<long long>(),
                  j.at("params").at("r").get<long long>()};
    rep.braid_index = j.at("braid_index").get<int>();
    rep.minimal_braid = word_from_json(j.at("minimal_braid"));
    rep.writhe = j.at("writhe").get<long long>();
    const auto& v = j.at("verdicts");
    auto verdict = [&](const char* key) {
        return verdict_from_text(v.at(key).get<std::string>());
    };
    rep.verdicts.quasipositive = verdict("quasipositive");
    rep.verdicts.quasinegative = verdict("quasinegative");
    rep.verdicts.strongly_quasipositive = verdict("strongly_quasipositive");
    rep.verdicts.positive = verdict("positive");
    rep.verdicts.braid_positive = verdict("braid_positive");
    rep.verdicts.alternating = verdict("alternating");
    rep.verdicts.quasi_alternating = verdict("quasi_alternating");
    rep.verdicts.fibered = verdict("fibered");
    rep.verdicts.slice = verdict("slice");
    rep.verdicts.squeezed = verdict("squeezed");
    rep.certificate = certificate_from_json(j.at("span_certificate"));
    if (j.contains("witnesses")) {
        const auto& w = j.at("witnesses");
        if (w.contains("quasipositive"))
            rep.witnesses.quasipositive = factorization_from_json(w.at("quasipositive"));
        if (w.contains("strongly_quasipositive"))
            rep.witnesses.strongly_quasipositive =
                factorization_from_json(w.at("strongly_quasipositive"));
        if (w.contains("braid_positive_word"))
            rep.witnesses.braid_positive_word = word_from_json(w.at("braid_positive_word"));
    }
    if (j.contains("obstruction")) rep.obstruction = obstruction_from_json(j.at("obstruction"));
    return rep;
}

} // namespace pretzel

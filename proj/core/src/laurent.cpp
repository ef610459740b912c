#include "pretzel/laurent.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace pretzel {

namespace {

void append_term_v(std::string& out, int ev, const Integer& c) {
    out += c.str();
    out += "*v^";
    out += std::to_string(ev);
}

// A canonical integer literal: optional '-', no leading zeros, "0" only alone.
bool parse_canonical_int(std::string_view s, long long& out) {
    if (s.empty()) return false;
    bool neg = s.front() == '-';
    std::string_view digits = neg ? s.substr(1) : s;
    if (digits.empty()) return false;
    for (char ch : digits)
        if (ch < '0' || ch > '9') return false;
    if (digits.size() > 1 && digits.front() == '0') return false;
    if (neg && digits == "0") return false;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

bool parse_coefficient(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    bool neg = s.front() == '-';
    std::string_view digits = neg ? s.substr(1) : s;
    if (digits.empty()) return false;
    for (char ch : digits)
        if (ch < '0' || ch > '9') return false;
    if (digits.size() > 1 && digits.front() == '0') return false;
    out = Integer(std::string(s));
    return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

// One term, shape `c*v^a` or `c*v^a*z^b`. want_z selects the arity.
void parse_term(std::string_view term, bool want_z, Integer& coeff, long long& ev, long long& ez) {
    auto fail = [&] { throw ParameterError("malformed polynomial term '" + std::string(term) + "'"); };
    auto parts = split(term, '*');
    if (parts.size() != (want_z ? 3u : 2u)) fail();
    if (!parse_coefficient(parts[0], coeff) || coeff == 0) fail();
    if (parts[1].substr(0, 2) != "v^" || !parse_canonical_int(parts[1].substr(2), ev)) fail();
    ez = 0;
    if (want_z) {
        if (parts[2].substr(0, 2) != "z^" || !parse_canonical_int(parts[2].substr(2), ez)) fail();
    }
}

} // namespace

std::string to_text(const LaurentPoly1& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += '+';
        append_term_v(out, e.v, c);
    }
    return out;
}

std::string to_text(const LaurentPoly2& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += '+';
        append_term_v(out, e.v, c);
        out += "*z^";
        out += std::to_string(e.z);
    }
    return out;
}

namespace {

template <typename Poly, typename MakeExp>
Poly parse_poly(const std::string& text, bool want_z, MakeExp make_exp) {
    if (text == "0") return Poly{};
    if (text.empty()) throw ParameterError("empty polynomial text");
    Poly p;
    std::optional<typename Poly::Terms::key_type> prev;
    for (std::string_view term : split(text, '+')) {
        Integer coeff;
        long long ev = 0, ez = 0;
        parse_term(term, want_z, coeff, ev, ez);
        auto key = make_exp(ev, ez);
        if (prev && !(*prev < key))
            throw ParameterError("polynomial terms out of canonical order at '" + std::string(term) + "'");
        prev = key;
        p.add_term(key, coeff);
    }
    return p;
}

} // namespace

LaurentPoly1 parse_poly1(const std::string& text) {
    return parse_poly<LaurentPoly1>(text, false, [](long long ev, long long) {
        return ExpV{static_cast<int>(ev)};
    });
}

LaurentPoly2 parse_poly2(const std::string& text) {
    return parse_poly<LaurentPoly2>(text, true, [](long long ev, long long ez) {
        return ExpVZ{static_cast<int>(ev), static_cast<int>(ez)};
    });
}

} // namespace pretzel

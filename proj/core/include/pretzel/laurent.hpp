#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <type_traits>
#include <utility>

#include "pretzel/errors.hpp"
#include "pretzel/integers.hpp"

namespace pretzel {

// Laurent polynomials over Z in v (one variable) or v, z (two variables),
// stored as a sorted term map with no zero coefficients. Equality is term-map
// equality; every operation returns canonical form. The canonical text format
// renders terms in ascending exponent order as `c*v^a` (one variable) or
// `c*v^a*z^b` (two variables), joined by `+`, with explicit signs on
// coefficients and exponents; the zero polynomial renders as `0`. That format
// is used verbatim in cache files, CLI output and test goldens.

struct ExpV {
    int v = 0;
    auto operator<=>(const ExpV&) const = default;
    ExpV operator+(const ExpV& o) const { return {v + o.v}; }
};

struct ExpVZ {
    int v = 0;
    int z = 0;
    auto operator<=>(const ExpVZ&) const = default;
    ExpVZ operator+(const ExpVZ& o) const { return {v + o.v, z + o.z}; }
};

struct VSpan {
    int lo = 0;
    int hi = 0;
    auto operator<=>(const VSpan&) const = default;
};

template <typename Exp>
class LaurentPoly {
public:
    using Terms = std::map<Exp, Integer>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<Exp, Integer>> init) {
        for (const auto& [e, c] : init) add_term(e, c);
    }

    static LaurentPoly monomial(Exp e, Integer c) {
        LaurentPoly p;
        p.add_term(e, std::move(c));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coefficient(Exp e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(Exp e, Integer c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r += o;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r -= o;
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // Multiplication by the single term c * (v,z)^e.
    LaurentPoly times_monomial(Exp e, const Integer& c = 1) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [ea, ca] : terms_) r.terms_.emplace(ea + e, ca * c);
        return r;
    }

    bool operator==(const LaurentPoly&) const = default;

private:
    Terms terms_;
};

using LaurentPoly1 = LaurentPoly<ExpV>;
using LaurentPoly2 = LaurentPoly<ExpVZ>;

inline LaurentPoly1 one_p1() { return LaurentPoly1::monomial({0}, 1); }
inline LaurentPoly2 one_p2() { return LaurentPoly2::monomial({0, 0}, 1); }

template <typename Exp>
LaurentPoly<Exp> pow(const LaurentPoly<Exp>& base, unsigned n) {
    LaurentPoly<Exp> r = LaurentPoly<Exp>::monomial(Exp{}, 1);
    for (unsigned i = 0; i < n; ++i) r *= base;
    return r;
}

// Minimum and maximum exponent of v over all stored terms. Undefined (an
// error) for the zero polynomial.
template <typename Exp>
VSpan v_span(const LaurentPoly<Exp>& p) {
    if (p.is_zero()) throw ParameterError("v_span: undefined for the zero polynomial");
    int lo = p.terms().begin()->first.v;
    int hi = lo;
    for (const auto& [e, c] : p.terms()) {
        if (e.v < lo) lo = e.v;
        if (e.v > hi) hi = e.v;
    }
    return {lo, hi};
}

// Substitutes z = 1, collecting like v-powers (cancellation may occur).
inline LaurentPoly1 specialize_z1(const LaurentPoly2& p) {
    LaurentPoly1 r;
    for (const auto& [e, c] : p.terms()) r.add_term({e.v}, c);
    return r;
}

// Substitutes v -> v^-1. Valid as the z=1 mirror rule for knots.
inline LaurentPoly1 invert_v(const LaurentPoly1& p) {
    LaurentPoly1 r;
    for (const auto& [e, c] : p.terms()) r.add_term({-e.v}, c);
    return r;
}

std::string to_text(const LaurentPoly1& p);
std::string to_text(const LaurentPoly2& p);

// Strict parsers for the canonical text format: terms must be in ascending
// exponent order with nonzero, duplicate-free coefficients, exactly as
// rendered by to_text. Throw ParameterError otherwise.
LaurentPoly1 parse_poly1(const std::string& text);
LaurentPoly2 parse_poly2(const std::string& text);

} // namespace pretzel

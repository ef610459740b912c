#include "pretzel/braid.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "pretzel/integers.hpp"

namespace pretzel {

namespace {

void check_letter(int letter, int strands, const std::string& where) {
    if (letter == 0) throw ParameterError(where + ": generator index 0 is invalid");
    int idx = std::abs(letter);
    if (idx > strands - 1)
        throw ParameterError(where + ": generator index " + std::to_string(idx) +
                             " out of range for " + std::to_string(strands) + " strands");
}

std::vector<int> repeated_letter(int index, long long exponent) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::llabs(exponent)));
    int letter = exponent >= 0 ? index : -index;
    for (long long i = 0; i < std::llabs(exponent); ++i) out.push_back(letter);
    return out;
}

void append(std::vector<int>& dst, const std::vector<int>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

bool parse_int(std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

} // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw ParameterError("braid word needs at least 1 strand");
    for (int g : letters_) check_letter(g, strands_, "braid word");
}

void PretzelParams::validate() const {
    if (p % 2 == 0) throw ParameterError("p must be odd");
    if (q % 2 == 0) throw ParameterError("q must be odd");
    if (p == 1 || p == -1) throw ParameterError("p must not be +-1");
    if (q == 1 || q == -1) throw ParameterError("q must not be +-1");
    if (r == 0) throw ParameterError("r must be nonzero");
}

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw ParameterError("braid word needs at least 1 strand");
    std::vector<int> letters;
    std::istringstream in(text);
    std::string token;
    int position = 0;
    bool letter_form = text.find('a') != std::string::npos;
    while (in >> token) {
        ++position;
        auto fail = [&](const std::string& why) {
            throw ParameterError("braid parse error at token " + std::to_string(position) +
                                 " '" + token + "': " + why);
        };
        long long index = 0, exponent = 1;
        if (letter_form) {
            if (token.size() < 2 || token[0] != 'a') fail("expected a<i> or a<i>^<e>");
            std::string_view rest(token);
            rest.remove_prefix(1);
            size_t caret = rest.find('^');
            std::string_view index_part = rest.substr(0, caret);
            if (!parse_int(index_part, index) || index <= 0) fail("bad generator index");
            if (caret != std::string_view::npos) {
                if (!parse_int(rest.substr(caret + 1), exponent)) fail("bad exponent");
            }
        } else {
            if (!parse_int(token, index)) fail("expected a signed integer");
            if (index == 0) fail("generator index 0 is invalid");
            exponent = index > 0 ? 1 : -1;
            index = std::llabs(index);
        }
        if (index > strands - 1)
            fail("generator index " + std::to_string(index) + " out of range for " +
                 std::to_string(strands) + " strands");
        append(letters, repeated_letter(static_cast<int>(index), exponent));
    }
    return BraidWord(strands, std::move(letters));
}

std::string signed_text(const BraidWord& word) {
    std::string out;
    for (int g : word.letters()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(g);
    }
    return out;
}

std::string letter_text(const BraidWord& word) {
    std::string out;
    const auto& letters = word.letters();
    for (size_t i = 0; i < letters.size();) {
        size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        long long run = static_cast<long long>(j - i);
        long long exponent = letters[i] > 0 ? run : -run;
        if (!out.empty()) out += ' ';
        out += 'a';
        out += std::to_string(std::abs(letters[i]));
        if (exponent != 1) {
            out += '^';
            out += std::to_string(exponent);
        }
        i = j;
    }
    return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw ParameterError("concat: strand counts differ");
    std::vector<int> letters = a.letters();
    append(letters, b.letters());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& word) {
    std::vector<int> letters(word.letters().rbegin(), word.letters().rend());
    for (int& g : letters) g = -g;
    return BraidWord(word.strands(), std::move(letters));
}

BraidWord mirror(const BraidWord& word) {
    std::vector<int> letters = word.letters();
    for (int& g : letters) g = -g;
    return BraidWord(word.strands(), std::move(letters));
}

long long writhe(const BraidWord& word) {
    long long w = 0;
    for (int g : word.letters()) w += g > 0 ? 1 : -1;
    return w;
}

int closure_components(const BraidWord& word) {
    int n = word.strands();
    std::vector<int> strand_at_slot(n);
    std::iota(strand_at_slot.begin(), strand_at_slot.end(), 0);
    for (int g : word.letters()) {
        int j = std::abs(g) - 1;
        std::swap(strand_at_slot[j], strand_at_slot[j + 1]);
    }
    // Closure identifies bottom slot t with top slot t; count cycles of
    // strand -> final slot.
    std::vector<int> next(n);
    for (int slot = 0; slot < n; ++slot) next[strand_at_slot[slot]] = slot;
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int t = s; !seen[t]; t = next[t]) seen[t] = true;
    }
    return cycles;
}

BraidWord free_reduce(const BraidWord& word) {
    std::vector<int> stack;
    stack.reserve(word.size());
    for (int g : word.letters()) {
        if (!stack.empty() && stack.back() == -g)
            stack.pop_back();
        else
            stack.push_back(g);
    }
    return BraidWord(word.strands(), std::move(stack));
}

BraidWord band_conjugator(long long r) {
    if (r == 0) throw ParameterError("r must be nonzero");
    long long n = std::llabs(r);
    std::vector<int> letters;
    for (long long i = 3; i <= n + 1; ++i) letters.push_back(static_cast<int>(i));
    return BraidWord(static_cast<int>(n + 2), std::move(letters));
}

BraidWord band_conjugator_reversed(long long r) {
    BraidWord run = band_conjugator(r);
    std::vector<int> letters(run.letters().rbegin(), run.letters().rend());
    return BraidWord(run.strands(), std::move(letters));
}

BraidWord pretzel_braid(const PretzelParams& params) {
    params.validate();
    int strands = static_cast<int>(std::llabs(params.r)) + 2;
    BraidWord run = band_conjugator(params.r);
    BraidWord run_rev = band_conjugator_reversed(params.r);
    std::vector<int> letters;
    append(letters, repeated_letter(1, params.p));
    if (params.r > 0) {
        letters.push_back(2);
        append(letters, repeated_letter(1, params.q));
        append(letters, inverse(run).letters());
        letters.push_back(2);
        append(letters, run.letters());
        append(letters, run_rev.letters());
    } else {
        letters.push_back(-2);
        append(letters, repeated_letter(1, params.q));
        append(letters, run_rev.letters());
        letters.push_back(-2);
        append(letters, inverse(run_rev).letters());
        append(letters, inverse(run).letters());
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord band_generator(int i, int j, int strands) {
    if (i < 1 || i > j || j >= strands)
        throw ParameterError("band generator needs 1 <= i <= j < strands");
    std::vector<int> letters;
    for (int k = j; k > i; --k) letters.push_back(-k);
    letters.push_back(i);
    for (int k = i + 1; k <= j; ++k) letters.push_back(k);
    return BraidWord(strands, std::move(letters));
}

bool is_band_factor(const BandFactor& factor) {
    const auto& run = factor.conjugator.letters();
    for (size_t k = 0; k < run.size(); ++k)
        if (run[k] != factor.generator + 1 + static_cast<int>(k)) return false;
    return true;
}

BraidWord expand(const BandFactorization& factorization) {
    std::vector<int> letters;
    for (const auto& factor : factorization.factors) {
        append(letters, inverse(factor.conjugator).letters());
        letters.push_back(factor.generator);
        append(letters, factor.conjugator.letters());
    }
    return BraidWord(factorization.strands, std::move(letters));
}

bool verify_factorization(const BandFactorization& factorization, const BraidWord& target) {
    if (factorization.strands != target.strands()) return false;
    if (factorization.kind == BandFactorization::Kind::StronglyQuasipositive)
        for (const auto& factor : factorization.factors)
            if (!is_band_factor(factor)) return false;
    return free_reduce(expand(factorization)) == free_reduce(target);
}

BandFactorization quasipositive_witness(const PretzelParams& params) {
    params.validate();
    if (params.p + params.q < 0 || params.r <= 0)
        throw ParameterError("quasipositive witness requires p+q >= 0 and r > 0");
    int strands = static_cast<int>(params.r) + 2;
    BandFactorization wit{BandFactorization::Kind::Quasipositive, strands, {}};
    BraidWord empty(strands, {});
    for (long long i = 0; i < params.p + params.q; ++i) wit.factors.push_back({empty, 1});
    wit.factors.push_back({BraidWord(strands, repeated_letter(1, params.q)), 2});
    wit.factors.push_back({band_conjugator(params.r), 2});
    for (int i = strands - 1; i >= 3; --i) wit.factors.push_back({empty, i});
    if (!verify_factorization(wit, pretzel_braid(params)))
        throw std::logic_error("quasipositive witness failed free-reduction check");
    return wit;
}

BandFactorization strongly_quasipositive_witness(const PretzelParams& params) {
    params.validate();
    if (params.p <= 0 || params.q <= 0 || params.r <= 0)
        throw ParameterError("strongly quasipositive witness requires p, q, r all > 0");
    int strands = static_cast<int>(params.r) + 2;
    BandFactorization wit{BandFactorization::Kind::StronglyQuasipositive, strands, {}};
    BraidWord empty(strands, {});
    for (long long i = 0; i < params.p; ++i) wit.factors.push_back({empty, 1});
    wit.factors.push_back({empty, 2});
    for (long long i = 0; i < params.q; ++i) wit.factors.push_back({empty, 1});
    wit.factors.push_back({band_conjugator(params.r), 2}); // b_{2, r+1}
    for (int i = strands - 1; i >= 3; --i) wit.factors.push_back({empty, i});
    if (!verify_factorization(wit, pretzel_braid(params)))
        throw std::logic_error("strongly quasipositive witness failed free-reduction check");
    return wit;
}

BraidWord connected_sum(const BraidWord& a, const BraidWord& b) {
    int shift = a.strands() - 1;
    std::vector<int> letters = a.letters();
    for (int g : b.letters()) letters.push_back(g > 0 ? g + shift : g - shift);
    return BraidWord(a.strands() + b.strands() - 1, std::move(letters));
}

} // namespace pretzel

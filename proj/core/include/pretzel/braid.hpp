#pragma once

#include <string>
#include <vector>

#include "pretzel/errors.hpp"

namespace pretzel {

// A braid word on a fixed number of strands. Letters are signed generator
// indices: +i is the standard generator a_i (strands i, i+1 cross, i over by
// the positive-crossing convention), -i its inverse. 1 <= |letter| < strands.
class BraidWord {
public:
    BraidWord() = default;
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const BraidWord&) const = default;

private:
    int strands_ = 1;
    std::vector<int> letters_;
};

// Parameters (p, q, r) naming the pretzel knot P(p, q, -2r): two strands of
// p and q half-twists and one of -2r. p, q odd and not +-1; r nonzero.
struct PretzelParams {
    long long p = 0;
    long long q = 0;
    long long r = 0;

    // Throws ParameterError naming the violated constraint.
    void validate() const;
    PretzelParams mirror() const { return {-p, -q, -r}; }
    bool operator==(const PretzelParams&) const = default;
};

// Accepts whitespace-separated signed generator indices ("1 1 2 -1") or
// letter form ("a1^5 a2 a1^-3"); both parse to the same word. Parse errors
// name the offending token and its position.
BraidWord parse_braid(const std::string& text, int strands);

// Canonical machine format: space-joined signed integers.
std::string signed_text(const BraidWord& word);
// Human-readable run-length letter form, e.g. "a1^5 a2 a1^-3".
std::string letter_text(const BraidWord& word);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& word);
// Flips the sign of every letter (diagram mirror image).
BraidWord mirror(const BraidWord& word);

// Exponent sum of the letters.
long long writhe(const BraidWord& word);

// Number of cycles of the permutation the word induces on strand endpoints;
// this is the component count of the closure link.
int closure_components(const BraidWord& word);

// Cancels adjacent inverse pairs until none remain. The result does not
// depend on cancellation order.
BraidWord free_reduce(const BraidWord& word);

// The ascending generator run a_3 a_4 ... a_{|r|+1} on |r|+2 strands (empty
// for |r| = 1); conjugating a_2 by it yields the band generator b_{2,|r|+1}.
BraidWord band_conjugator(long long r);
// The same run in reverse order, a_{|r|+1} ... a_4 a_3.
BraidWord band_conjugator_reversed(long long r);

// The minimal-strand pretzel braid for P(p, q, -2r), on |r|+2 strands:
//   r > 0:  a_1^p a_2 a_1^q g^-1 a_2 g g'
//   r < 0:  a_1^p a_2^-1 a_1^q g' a_2^-1 g'^-1 g^-1
// where g and g' are the band conjugator and its reversal.
BraidWord pretzel_braid(const PretzelParams& params);

// Band generator b_{ij} = (a_{i+1} ... a_j)^-1 a_i (a_{i+1} ... a_j) on the
// given strand count, 1 <= i <= j < strands; b_{ii} = a_i.
BraidWord band_generator(int i, int j, int strands);

// One conjugated-generator factor: expands to conjugator^-1 a_g conjugator.
struct BandFactor {
    BraidWord conjugator;
    int generator = 1;

    bool operator==(const BandFactor&) const = default;
};

// A certificate that a braid is (strongly) quasipositive: an explicit list
// of conjugated-generator factors whose concatenated expansion freely
// reduces to the target word.
struct BandFactorization {
    enum class Kind { Quasipositive, StronglyQuasipositive };

    Kind kind = Kind::Quasipositive;
    int strands = 1;
    std::vector<BandFactor> factors;
};

// True when the factor is a band generator b_{ij}: empty conjugator, or the
// ascending run a_{g+1} ... a_j.
bool is_band_factor(const BandFactor& factor);

BraidWord expand(const BandFactorization& factorization);

// Checks the factorization's defining property against a freely reduced
// target word.
bool verify_factorization(const BandFactorization& factorization, const BraidWord& target);

// Quasipositivity witness for pretzel_braid(params); requires p+q >= 0 and
// r > 0. The a_1^p a_2 a_1^q prefix is regrouped as a_1^(p+q) times a
// conjugate of a_2.
BandFactorization quasipositive_witness(const PretzelParams& params);

// Strong quasipositivity witness; requires p, q, r all > 0. Every factor is
// a band generator: a_1^p a_2 a_1^q b_{2,r+1} followed by the reversed run.
BandFactorization strongly_quasipositive_witness(const PretzelParams& params);

// Braid whose closure is the connected sum of the two closures (valid when
// both closures are knots): b's letters shifted past a's strands.
BraidWord connected_sum(const BraidWord& a, const BraidWord& b);

} // namespace pretzel

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pretzel/braid.hpp"

namespace pretzel {

// One oriented crossing. Arc ids are arbitrary integers; every arc appears
// exactly once as an in-slot and once as an out-slot across the diagram. The
// over strand runs in_over -> out_over, the under strand in_under ->
// out_under. The stored sign is the geometric crossing sign (+1 when the
// under strand passes right to left seen along the over strand).
struct Crossing {
    int sign = 1;
    int in_over = 0;
    int in_under = 0;
    int out_over = 0;
    int out_under = 0;

    bool operator==(const Crossing&) const = default;
};

// An oriented link diagram given combinatorially: crossings plus a count of
// crossing-free circle components. Connectivity is carried by the shared arc
// ids. Construction validates the arc invariant and computes the component
// count.
class LinkDiagram {
public:
    LinkDiagram() = default;
    LinkDiagram(std::vector<Crossing> crossings, int free_loops);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int free_loops() const { return free_loops_; }
    int components() const { return components_; }

    bool operator==(const LinkDiagram&) const = default;

private:
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    int components_ = 0;
};

// The closure of a braid word: one crossing per letter with the letter's
// sign; strand positions untouched by any letter close into free loops.
LinkDiagram braid_closure(const BraidWord& word);

// The same diagram with one crossing's over/under strands exchanged (sign
// flips): the L+ <-> L- move of the skein triple.
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing);

// The oriented resolution of one crossing: in_over joins out_under and
// in_under joins out_over; may create free loops.
LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing);

// Index of the first crossing met on its under strand before having been
// met on its over strand, traversing components from deterministic
// basepoints; nullopt when the diagram is descending (hence an unlink).
std::optional<int> first_descending_violation(const LinkDiagram& d);

// A presentation-independent key: per connected piece, the lexicographically
// least signed Gauss code over all basepoint choices, pieces sorted, plus
// the free-loop count. Equal keys identify combinatorially identical
// diagrams regardless of arc labels, crossing order, or where a braid word
// was cut.
std::string canonical_key(const LinkDiagram& d);

} // namespace pretzel

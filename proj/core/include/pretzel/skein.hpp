#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "pretzel/diagram.hpp"
#include "pretzel/laurent.hpp"

namespace pretzel {

// Caps on the skein recursion. Exceeding either raises BudgetError; the
// oracle never degrades to an approximate answer.
struct HomflyBudget {
    int max_crossings = 24;
    std::uint64_t max_nodes = 20'000'000;
};

// Memo table of the skein recursion, keyed by canonical_key. Lookups and
// insert-if-absent are safe under concurrent use; recomputing any cached
// entry from scratch yields the identical polynomial.
class SkeinCache {
public:
    SkeinCache() = default;
    SkeinCache(const SkeinCache&) = delete;
    SkeinCache& operator=(const SkeinCache&) = delete;

    std::optional<LaurentPoly2> lookup(const std::string& key) const;
    void insert(const std::string& key, const LaurentPoly2& value);
    std::size_t size() const;

    // One record per line, `key<TAB>polynomial`, sorted by key. A line that
    // does not parse back exactly is a hard IoError naming the line.
    void save(const std::string& path) const;
    void load(const std::string& path);

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, LaurentPoly2> map_;
};

// The Homflypt polynomial of the diagram's link under the skein relation
// v^-1 Q(L+) - v Q(L-) = z Q(L0) with Q(unknot) = 1. Recursion: at the first
// crossing met on its under strand, branch into the switched diagram
// (strictly closer to descending) and the oriented resolution (one fewer
// crossing); descending diagrams are unlinks with known polynomial
// ((v^-1 - v) z^-1)^(components-1).
LaurentPoly2 homfly(const LinkDiagram& d, SkeinCache& cache, const HomflyBudget& budget = {});

// Convenience: closure of a braid word.
LaurentPoly2 homfly(const BraidWord& word, SkeinCache& cache, const HomflyBudget& budget = {});

// Builds the (L+, L-, L0) triple at one crossing, computes the three
// polynomials independently, and reports whether the skein relation holds
// exactly. A shared cache may be supplied to reuse subdiagram results.
bool skein_check(const LinkDiagram& d, int crossing, SkeinCache* cache = nullptr,
                 const HomflyBudget& budget = {});

} // namespace pretzel

#include "pretzel/skein.hpp"

#include <algorithm>
#include <fstream>
#include <vector>

#include "pretzel/errors.hpp"

namespace pretzel {

std::optional<LaurentPoly2> SkeinCache::lookup(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void SkeinCache::insert(const std::string& key, const LaurentPoly2& value) {
    std::lock_guard lock(mutex_);
    map_.emplace(key, value);
}

std::size_t SkeinCache::size() const {
    std::lock_guard lock(mutex_);
    return map_.size();
}

void SkeinCache::save(const std::string& path) const {
    std::vector<std::pair<std::string, std::string>> rows;
    {
        std::lock_guard lock(mutex_);
        rows.reserve(map_.size());
        for (const auto& [key, poly] : map_) rows.emplace_back(key, to_text(poly));
    }
    std::sort(rows.begin(), rows.end());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open cache file for writing: " + path);
    for (const auto& [key, text] : rows) out << key << '\t' << text << '\n';
    out.flush();
    if (!out) throw IoError("failed writing cache file: " + path);
}

void SkeinCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open cache file: " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto corrupt = [&](const std::string& why) {
            throw IoError("cache file " + path + " line " + std::to_string(line_no) + ": " + why);
        };
        if (line.empty()) corrupt("empty line");
        size_t tab = line.find('\t');
        if (tab == std::string::npos) corrupt("missing tab separator");
        std::string key = line.substr(0, tab);
        if (key.empty() || key.front() != 'U') corrupt("malformed diagram key");
        LaurentPoly2 value;
        try {
            value = parse_poly2(line.substr(tab + 1));
        } catch (const ParameterError& e) {
            corrupt(e.what());
        }
        std::lock_guard lock(mutex_);
        if (!map_.emplace(key, value).second && map_.at(key) != value)
            corrupt("conflicting duplicate key");
    }
}

namespace {

LaurentPoly2 unlink_polynomial(int components) {
    // ((v^-1 - v) z^-1)^(components - 1), carried directly so no division
    // by z ever happens.
    LaurentPoly2 delta{{{-1, -1}, 1}, {{1, -1}, -1}};
    return pow(delta, static_cast<unsigned>(components - 1));
}

struct SkeinContext {
    SkeinCache& cache;
    const HomflyBudget& budget;
    std::uint64_t nodes = 0;
};

LaurentPoly2 resolve(const LinkDiagram& d, SkeinContext& ctx) {
    if (++ctx.nodes > ctx.budget.max_nodes)
        throw BudgetError("skein node budget exceeded (cap " +
                          std::to_string(ctx.budget.max_nodes) + ")");
    std::string key = canonical_key(d);
    if (auto hit = ctx.cache.lookup(key)) return *hit;
    LaurentPoly2 result;
    if (auto violation = first_descending_violation(d)) {
        int i = *violation;
        LaurentPoly2 switched = resolve(switch_crossing(d, i), ctx);
        LaurentPoly2 resolved = resolve(smooth_crossing(d, i), ctx);
        if (d.crossings()[i].sign > 0) {
            // d = L+: Q = v^2 Q(L-) + v z Q(L0)
            result = switched.times_monomial({2, 0}) + resolved.times_monomial({1, 1});
        } else {
            // d = L-: Q = v^-2 Q(L+) - v^-1 z Q(L0)
            result = switched.times_monomial({-2, 0}) - resolved.times_monomial({-1, 1});
        }
    } else {
        result = unlink_polynomial(d.components());
    }
    ctx.cache.insert(key, result);
    return result;
}

} // namespace

LaurentPoly2 homfly(const LinkDiagram& d, SkeinCache& cache, const HomflyBudget& budget) {
    if (d.components() < 1) throw ParameterError("homfly: empty link");
    if (static_cast<int>(d.crossings().size()) > budget.max_crossings)
        throw BudgetError("diagram has " + std::to_string(d.crossings().size()) +
                          " crossings, over the cap of " + std::to_string(budget.max_crossings));
    SkeinContext ctx{cache, budget};
    return resolve(d, ctx);
}

LaurentPoly2 homfly(const BraidWord& word, SkeinCache& cache, const HomflyBudget& budget) {
    return homfly(braid_closure(word), cache, budget);
}

bool skein_check(const LinkDiagram& d, int crossing, SkeinCache* cache,
                 const HomflyBudget& budget) {
    if (crossing < 0 || crossing >= static_cast<int>(d.crossings().size()))
        throw ParameterError("crossing index out of range");
    SkeinCache local;
    SkeinCache& shared = cache ? *cache : local;
    bool positive = d.crossings()[crossing].sign > 0;
    LinkDiagram switched = switch_crossing(d, crossing);
    const LinkDiagram& plus = positive ? d : switched;
    const LinkDiagram& minus = positive ? switched : d;
    LaurentPoly2 q_plus = homfly(plus, shared, budget);
    LaurentPoly2 q_minus = homfly(minus, shared, budget);
    LaurentPoly2 q_zero = homfly(smooth_crossing(d, crossing), shared, budget);
    return q_plus.times_monomial({-1, 0}) - q_minus.times_monomial({1, 0}) ==
           q_zero.times_monomial({0, 1});
}

} // namespace pretzel

#include "pretzel/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

enum class Role { Over, Under };

// Where an arc ends (head) and begins (tail), and on which strand of the
// crossing. Built once per diagram; arcs keep sparse ids.
struct ArcIndex {
    struct End {
        int crossing = -1;
        Role role = Role::Over;
    };
    std::map<int, End> head; // arc -> crossing it enters
    std::map<int, End> tail; // arc -> crossing it leaves

    explicit ArcIndex(const LinkDiagram& d) {
        for (int i = 0; i < static_cast<int>(d.crossings().size()); ++i) {
            const Crossing& c = d.crossings()[i];
            insert(head, c.in_over, {i, Role::Over});
            insert(head, c.in_under, {i, Role::Under});
            insert(tail, c.out_over, {i, Role::Over});
            insert(tail, c.out_under, {i, Role::Under});
        }
    }

    static void insert(std::map<int, End>& m, int arc, ArcIndex::End end) {
        if (!m.emplace(arc, end).second)
            throw ParameterError("malformed diagram: arc " + std::to_string(arc) +
                                 " occupies two slots of the same direction");
    }
};

int next_arc_of(const Crossing& c, Role role) {
    return role == Role::Over ? c.out_over : c.out_under;
}

} // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw ParameterError("negative free loop count");
    for (const Crossing& c : crossings_)
        if (c.sign != 1 && c.sign != -1) throw ParameterError("crossing sign must be +-1");
    ArcIndex arcs(*this);
    if (arcs.head.size() != arcs.tail.size() ||
        !std::equal(arcs.head.begin(), arcs.head.end(), arcs.tail.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; }))
        throw ParameterError("malformed diagram: arcs must appear once incoming and once outgoing");
    // Component count: cycles of the arc successor map, plus free loops.
    std::map<int, bool> visited;
    for (const auto& [arc, end] : arcs.head) visited[arc] = false;
    components_ = free_loops_;
    for (const auto& [start, end0] : arcs.head) {
        if (visited[start]) continue;
        ++components_;
        int arc = start;
        while (!visited[arc]) {
            visited[arc] = true;
            const auto& end = arcs.head.at(arc);
            arc = next_arc_of(crossings_[end.crossing], end.role);
        }
    }
}

LinkDiagram braid_closure(const BraidWord& word) {
    int n = word.strands();
    const auto& letters = word.letters();
    std::vector<std::vector<int>> events(n + 1); // letter positions touching each strand
    for (int t = 0; t < static_cast<int>(letters.size()); ++t) {
        int j = std::abs(letters[t]);
        events[j].push_back(t);
        events[j + 1].push_back(t);
    }
    int free_loops = 0;
    int next_arc = 0;
    // arc_below[i][a]: id of the segment of strand position i below its a-th
    // event; the last segment wraps through the closure to the top.
    std::vector<std::vector<int>> arc_below(n + 1);
    for (int i = 1; i <= n; ++i) {
        if (events[i].empty()) {
            ++free_loops;
            continue;
        }
        arc_below[i].resize(events[i].size());
        for (int& id : arc_below[i]) id = next_arc++;
    }
    struct Sides {
        int in_left = -1, out_left = -1, in_right = -1, out_right = -1;
    };
    std::vector<Sides> sides(letters.size());
    for (int i = 1; i <= n; ++i) {
        int k = static_cast<int>(events[i].size());
        for (int a = 0; a < k; ++a) {
            int t = events[i][a];
            int in_arc = arc_below[i][(a + k - 1) % k];
            int out_arc = arc_below[i][a];
            if (std::abs(letters[t]) == i) { // this strand position is the left side
                sides[t].in_left = in_arc;
                sides[t].out_left = out_arc;
            } else {
                sides[t].in_right = in_arc;
                sides[t].out_right = out_arc;
            }
        }
    }
    std::vector<Crossing> crossings(letters.size());
    for (size_t t = 0; t < letters.size(); ++t) {
        Crossing& c = crossings[t];
        c.sign = letters[t] > 0 ? 1 : -1;
        if (c.sign > 0) {
            // Positive crossing: the over strand enters on the right.
            c.in_over = sides[t].in_right;
            c.out_over = sides[t].out_left;
            c.in_under = sides[t].in_left;
            c.out_under = sides[t].out_right;
        } else {
            c.in_over = sides[t].in_left;
            c.out_over = sides[t].out_right;
            c.in_under = sides[t].in_right;
            c.out_under = sides[t].out_left;
        }
    }
    return LinkDiagram(std::move(crossings), free_loops);
}

LinkDiagram switch_crossing(const LinkDiagram& d, int crossing) {
    if (crossing < 0 || crossing >= static_cast<int>(d.crossings().size()))
        throw ParameterError("crossing index out of range");
    std::vector<Crossing> crossings = d.crossings();
    Crossing& c = crossings[crossing];
    std::swap(c.in_over, c.in_under);
    std::swap(c.out_over, c.out_under);
    c.sign = -c.sign;
    return LinkDiagram(std::move(crossings), d.free_loops());
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing) {
    if (crossing < 0 || crossing >= static_cast<int>(d.crossings().size()))
        throw ParameterError("crossing index out of range");
    const Crossing removed = d.crossings()[crossing];
    std::vector<Crossing> crossings;
    crossings.reserve(d.crossings().size() - 1);
    for (int i = 0; i < static_cast<int>(d.crossings().size()); ++i)
        if (i != crossing) crossings.push_back(d.crossings()[i]);
    int free_loops = d.free_loops();

    auto relabel = [&crossings](int from, int to) {
        for (Crossing& c : crossings) {
            if (c.in_over == from) c.in_over = to;
            if (c.in_under == from) c.in_under = to;
            if (c.out_over == from) c.out_over = to;
            if (c.out_under == from) c.out_under = to;
        }
    };

    // Join in_over -> out_under, then in_under -> out_over.
    int a1 = removed.in_over, b1 = removed.out_under;
    int a2 = removed.in_under, b2 = removed.out_over;
    if (a1 == b1) {
        ++free_loops;
    } else {
        relabel(b1, a1);
        if (a2 == b1) a2 = a1;
        if (b2 == b1) b2 = a1;
    }
    if (a2 == b2)
        ++free_loops;
    else
        relabel(b2, a2);
    return LinkDiagram(std::move(crossings), free_loops);
}

std::optional<int> first_descending_violation(const LinkDiagram& d) {
    if (d.crossings().empty()) return std::nullopt;
    ArcIndex arcs(d);
    std::map<int, bool> visited;
    for (const auto& [arc, end] : arcs.head) visited[arc] = false;
    std::vector<bool> met(d.crossings().size(), false);
    for (const auto& [start, end0] : arcs.head) {
        if (visited[start]) continue;
        int arc = start;
        while (!visited[arc]) {
            visited[arc] = true;
            const auto& end = arcs.head.at(arc);
            if (!met[end.crossing]) {
                met[end.crossing] = true;
                if (end.role == Role::Under) return end.crossing;
            }
            arc = next_arc_of(d.crossings()[end.crossing], end.role);
        }
    }
    return std::nullopt;
}

namespace {

// Signed Gauss code of one connected piece from a given start arc. Crossing
// labels are assigned in first-encounter order; after a component closes,
// the next start is the first untraversed arc in slot order over labelled
// crossings, which keeps the rule independent of the original arc ids.
std::string encode_piece(const LinkDiagram& d, const ArcIndex& arcs,
                         const std::vector<int>& piece, int start_arc) {
    std::vector<int> label(d.crossings().size(), -1);
    std::vector<int> labelled; // crossing indices in label order
    std::map<int, bool> done;
    size_t total_arcs = 0;
    for (int ci : piece) {
        const Crossing& c = d.crossings()[ci];
        for (int arc : {c.in_over, c.in_under}) {
            if (!done.contains(arc)) {
                done[arc] = false;
                ++total_arcs;
            }
        }
    }
    std::string out;
    int next_label = 0;
    size_t traversed = 0;
    int arc = start_arc;
    while (true) {
        int component_start = arc;
        do {
            done[arc] = true;
            ++traversed;
            const auto& end = arcs.head.at(arc);
            const Crossing& c = d.crossings()[end.crossing];
            if (label[end.crossing] < 0) {
                label[end.crossing] = next_label++;
                labelled.push_back(end.crossing);
            }
            out += end.role == Role::Over ? 'O' : 'U';
            out += c.sign > 0 ? '+' : '-';
            out += std::to_string(label[end.crossing]);
            out += ',';
            arc = next_arc_of(c, end.role);
        } while (arc != component_start);
        out += ';';
        if (traversed == total_arcs) break;
        arc = -1;
        for (int ci : labelled) {
            const Crossing& c = d.crossings()[ci];
            for (int candidate : {c.in_over, c.in_under, c.out_over, c.out_under}) {
                if (!done.at(candidate)) {
                    arc = candidate;
                    break;
                }
            }
            if (arc >= 0) break;
        }
        if (arc < 0) break; // piece exhausted
    }
    return out;
}

} // namespace

std::string canonical_key(const LinkDiagram& d) {
    std::string key = "U" + std::to_string(d.free_loops()) + ":";
    if (d.crossings().empty()) return key;
    ArcIndex arcs(d);
    // Connected pieces of the underlying 4-valent graph.
    int n = static_cast<int>(d.crossings().size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [arc, end] : arcs.head) {
        int a = find(end.crossing);
        int b = find(arcs.tail.at(arc).crossing);
        parent[a] = b;
    }
    std::map<int, std::vector<int>> pieces;
    for (int i = 0; i < n; ++i) pieces[find(i)].push_back(i);
    std::vector<std::string> piece_keys;
    for (const auto& [root, piece] : pieces) {
        std::string best;
        for (int ci : piece) {
            const Crossing& c = d.crossings()[ci];
            for (int arc : {c.in_over, c.in_under}) {
                std::string code = encode_piece(d, arcs, piece, arc);
                if (best.empty() || code < best) best = std::move(code);
            }
        }
        piece_keys.push_back(std::move(best));
    }
    std::sort(piece_keys.begin(), piece_keys.end());
    for (const std::string& k : piece_keys) {
        key += k;
        key += '|';
    }
    return key;
}

} // namespace pretzel

#include "abperfect/recognizers.hpp"

#include <algorithm>
#include <array>

namespace abperfect {

namespace {

// Shortest path from `from` to `to` using only vertices in `within`.
std::optional<std::vector<int>> shortest_path(const Graph& g, int from, int to, Mask within) {
    std::array<int, kMaxVertices> parent{};
    parent.fill(-1);
    Mask seen = bit(from);
    std::vector<int> queue{from};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        if (u == to) break;
        for (Mask m = g.neighbors(u) & within & ~seen; m; m &= m - 1) {
            const int v = lowest(m);
            seen |= bit(v);
            parent[v] = u;
            queue.push_back(v);
        }
    }
    if (!(seen & bit(to))) return std::nullopt;
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// An induced cycle through v whose neighbors on the cycle are x and y.
// A shortest x-y path avoiding v's other neighbors is chordless, and v sees
// only its ends, so closing it through v gives an induced cycle.
std::optional<std::vector<int>> hole_through(const Graph& g, int v, int x, int y) {
    const Mask avoid = (g.neighbors(v) | bit(v)) & ~(bit(x) | bit(y));
    auto path = shortest_path(g, x, y, g.all() & ~avoid);
    if (!path) return std::nullopt;
    std::vector<int> cycle{v};
    cycle.insert(cycle.end(), path->begin(), path->end());
    return cycle;
}

std::optional<std::vector<int>> find_hole(const Graph& g, int v) {
    const Mask nbrs = g.neighbors(v);
    for (Mask mx = nbrs; mx; mx &= mx - 1) {
        const int x = lowest(mx);
        for (Mask my = nbrs & ~low_mask(x + 1) & ~g.neighbors(x); my; my &= my - 1)
            if (auto c = hole_through(g, v, x, lowest(my))) return c;
    }
    return std::nullopt;
}

std::string cycle_name(std::size_t len) { return "C" + std::to_string(len); }

// Odd induced cycle of length >= 5 by subset enumeration: a subset induces a
// cycle iff it is connected and 2-regular.
std::optional<std::vector<int>> odd_hole(const Graph& g) {
    for (int size = 5; size <= g.order(); size += 2) {
        for (Mask s = low_mask(size); s && s <= g.all();) {
            bool two_regular = true;
            for (Mask m = s; m && two_regular; m &= m - 1) two_regular = popcount(g.neighbors(lowest(m)) & s) == 2;
            if (two_regular && reach(g, bit(lowest(s)), s) == s) {
                std::vector<int> cycle{lowest(s)};
                Mask left = s & ~bit(cycle[0]);
                while (left) {
                    const int next = lowest(g.neighbors(cycle.back()) & left);
                    cycle.push_back(next);
                    left &= ~bit(next);
                }
                return cycle;
            }
            // next subset of the same size (Gosper's hack)
            const Mask c = s & (~s + 1);
            const Mask r = s + c;
            if (r == 0) break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<int> lex_bfs_elimination_order(const Graph& g) {
    const int n = g.order();
    // Labels as sorted lists of visit times, most recent first; lexicographic
    // comparison of these lists is the LexBFS order on labels.
    std::vector<std::vector<int>> label(n);
    std::vector<int> visit;
    Mask unvisited = g.all();
    for (int step = n; step > 0; --step) {
        int pick = -1;
        for (Mask m = unvisited; m; m &= m - 1) {
            const int v = lowest(m);
            if (pick < 0 || label[v] > label[pick]) pick = v;
        }
        visit.push_back(pick);
        unvisited &= ~bit(pick);
        for (Mask m = g.neighbors(pick) & unvisited; m; m &= m - 1) label[lowest(m)].push_back(step);
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

ClassVerdict is_chordal(const Graph& g) {
    const auto order = lex_bfs_elimination_order(g);
    Mask later = g.all();
    for (int v : order) {
        later &= ~bit(v);
        const Mask up = g.neighbors(v) & later;
        bool clique = true;
        for (Mask m = up; m && clique; m &= m - 1) clique = (up & ~bit(lowest(m)) & ~g.neighbors(lowest(m))) == 0;
        if (clique) continue;
        // Try the failing vertex first, then every vertex, so a hole is always found.
        auto hole = find_hole(g, v);
        for (int u = 0; !hole && u < g.order(); ++u) hole = find_hole(g, u);
        if (!hole) throw std::logic_error("elimination order failed but no induced cycle found");
        return {false, ClassWitness{cycle_name(hole->size()), *hole}};
    }
    return {};
}

ClassVerdict is_free(const Graph& g, const std::vector<Pattern>& family) {
    for (const auto& p : family)
        if (auto hit = find_induced(g, p)) return {false, ClassWitness{p.name, *hit}};
    return {};
}

ClassVerdict is_trivially_perfect(const Graph& g) {
    const auto& cat = PatternCatalog::builtin();
    return is_free(g, {cat.at("C4"), cat.at("P4")});
}

ClassVerdict is_berge(const Graph& g) {
    if (g.order() > kMaxBergeOrder)
        throw std::invalid_argument("Berge recognition is limited to 12 vertices, got " + std::to_string(g.order()));
    if (auto c = odd_hole(g)) return {false, ClassWitness{cycle_name(c->size()), *c}};
    if (auto c = odd_hole(complement(g))) return {false, ClassWitness{cycle_name(c->size()), *c, true}};
    return {};
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int len = int(cycle.size());
    if (len < 3) return false;
    Mask s = 0;
    for (int v : cycle) s |= bit(v);
    if (popcount(s) != len) return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

} // namespace abperfect

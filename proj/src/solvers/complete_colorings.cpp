#include <algorithm>
#include <optional>

#include "abperfect/solvers.hpp"
#include "partition_search.hpp"

namespace abperfect {

using detail::PartitionSearch;
using detail::to_partition;

namespace {

int max_complete_classes(int edges, int n) {
    int k = 1;
    while (k + 1 <= n && (k + 1) * k / 2 <= edges) ++k;
    return k;
}

// Largest k such that at least k vertices have degree >= k - 1; bounds every
// coloring in which each class needs a vertex seeing all other classes.
int m_degree(const Graph& g) {
    int best = 1;
    for (int k = 1; k <= g.order(); ++k) {
        int count = 0;
        for (int v = 0; v < g.order(); ++v) count += g.degree(v) >= k - 1;
        if (count >= k) best = k;
    }
    return best;
}

bool classes_adjacent(const Graph& g, std::span<const Mask> cls) {
    for (std::size_t c = 0; c < cls.size(); ++c) {
        Mask reach = neighborhood(g, cls[c]);
        for (std::size_t d = c + 1; d < cls.size(); ++d)
            if (!(reach & cls[d])) return false;
    }
    return true;
}

bool classes_dominating(const Graph& g, std::span<const Mask> cls) {
    for (std::size_t c = 0; c < cls.size(); ++c) {
        bool found = false;
        for (Mask m = cls[c]; m && !found; m &= m - 1) {
            const Mask nbrs = g.neighbors(lowest(m));
            found = true;
            for (std::size_t d = 0; d < cls.size() && found; ++d)
                if (d != c && !(nbrs & cls[d])) found = false;
        }
        if (!found) return false;
    }
    return true;
}

template <class Leaf>
std::optional<ColoringPartition> largest(const Graph& g, Mask domain, int upper, bool proper,
                                         bool need_complete, Leaf leaf) {
    for (int k = upper; k >= 1; --k) {
        std::optional<ColoringPartition> found;
        PartitionSearch search(g, {domain, k, proper, need_complete});
        search.run([&](std::span<const Mask> cls) {
            if (!leaf(cls)) return false;
            found = to_partition(cls);
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

} // namespace

ColoringPartition optimal_coloring(const Graph& g) {
    for (int k = clique_number(g);; ++k) {
        std::optional<ColoringPartition> found;
        PartitionSearch search(g, {g.all(), k, true, false});
        search.run([&](std::span<const Mask> cls) {
            found = to_partition(cls);
            return true;
        });
        if (found) return *found;
    }
}

int chromatic_number(const Graph& g) { return optimal_coloring(g).size(); }

ColoringPartition pseudoachromatic_coloring(const Graph& g) {
    return *largest(g, g.all(), max_complete_classes(g.edge_count(), g.order()), false, true,
                    [&](std::span<const Mask> cls) { return classes_adjacent(g, cls); });
}

int pseudoachromatic_number(const Graph& g) { return pseudoachromatic_coloring(g).size(); }

ColoringPartition achromatic_coloring(const Graph& g) {
    return *largest(g, g.all(), max_complete_classes(g.edge_count(), g.order()), true, true,
                    [&](std::span<const Mask> cls) { return classes_adjacent(g, cls); });
}

int achromatic_number(const Graph& g) { return achromatic_coloring(g).size(); }

ColoringPartition b_chromatic_coloring(const Graph& g) {
    return *largest(g, g.all(), m_degree(g), true, true,
                    [&](std::span<const Mask> cls) { return classes_dominating(g, cls); });
}

int b_chromatic_number(const Graph& g) { return b_chromatic_coloring(g).size(); }

ColoringPartition pseudo_b_chromatic_coloring(const Graph& g) {
    return *largest(g, g.all(), m_degree(g), false, true,
                    [&](std::span<const Mask> cls) { return classes_dominating(g, cls); });
}

int pseudo_b_chromatic_number(const Graph& g) { return pseudo_b_chromatic_coloring(g).size(); }

ColoringPartition hadwiger_coloring(const Graph& g) {
    ColoringPartition best;
    for (VertexSet comp : components(g)) {
        int edges = 0;
        for (int v : comp.vertices()) edges += popcount(g.neighbors(v));
        edges /= 2;
        const int upper = max_complete_classes(edges, comp.size());
        if (upper <= best.size()) continue;
        auto found = largest(g, comp.bits(), upper, false, true, [&](std::span<const Mask> cls) {
            if (!classes_adjacent(g, cls)) return false;
            for (Mask m : cls)
                if (reach(g, bit(lowest(m)), m) != m) return false;
            return true;
        });
        if (found->size() > best.size()) best = std::move(*found);
    }
    return best;
}

int hadwiger_via_coloring(const Graph& g) { return hadwiger_coloring(g).size(); }

} // namespace abperfect

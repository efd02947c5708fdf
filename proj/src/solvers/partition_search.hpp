#pragma once

#include <array>
#include <span>

#include "abperfect/coloring.hpp"
#include "abperfect/graph.hpp"

namespace abperfect::detail {

// Backtracking over set partitions of `domain` into exactly `classes` blocks.
// Vertices are assigned in increasing order and a vertex may only open the
// next unused class, so each partition is visited once. Leaves are offered to
// the caller in lexicographic order of the class-index string.
class PartitionSearch {
  public:
    struct Options {
        Mask domain = 0;
        int classes = 0;
        bool proper = false;
        // Prune when the adjacent class pairs so far plus the edges still
        // touching unassigned vertices cannot reach classes*(classes-1)/2.
        bool need_complete = false;
    };

    PartitionSearch(const Graph& g, Options opt) : g_(g), opt_(opt) {
        for (Mask m = opt.domain; m; m &= m - 1) order_[m_++] = lowest(m);
        // edges_from_[i]: edges inside the domain with an endpoint in order_[i..].
        edges_from_[m_] = 0;
        for (int i = m_ - 1; i >= 0; --i) {
            int v = order_[i];
            Mask later = 0;
            for (int j = i; j < m_; ++j) later |= bit(order_[j]);
            edges_from_[i] = edges_from_[i + 1] + popcount(g.neighbors(v) & opt.domain & ~later);
            // Edges among order_[i..] are counted once, at their earlier endpoint.
            edges_from_[i] += popcount(g.neighbors(v) & later & ~low_mask(v + 1));
        }
    }

    /// Calls leaf(span of class masks) until it returns true.
    template <class Leaf>
    bool run(Leaf&& leaf) {
        if (opt_.classes < 1 || opt_.classes > m_) return false;
        return assign(0, 0, leaf);
    }

  private:
    template <class Leaf>
    bool assign(int i, int used, Leaf& leaf) {
        const int k = opt_.classes;
        if (i == m_) return used == k && leaf(std::span<const Mask>(cls_.data(), k));
        if (used + (m_ - i) < k) return false;
        if (opt_.need_complete && adjacent_pairs(used) + edges_from_[i] < k * (k - 1) / 2) return false;
        const int v = order_[i];
        const Mask nbrs = g_.neighbors(v);
        const int top = used < k ? used : k - 1;
        for (int c = 0; c <= top; ++c) {
            if (opt_.proper && (nbrs & cls_[c])) continue;
            cls_[c] |= bit(v);
            if (assign(i + 1, c == used ? used + 1 : used, leaf)) return true;
            cls_[c] &= ~bit(v);
        }
        return false;
    }

    int adjacent_pairs(int used) const {
        int count = 0;
        for (int c = 0; c < used; ++c) {
            Mask reach = neighborhood(g_, cls_[c]);
            for (int d = c + 1; d < used; ++d) count += (reach & cls_[d]) != 0;
        }
        return count;
    }

    const Graph& g_;
    Options opt_;
    int m_ = 0;
    std::array<int, kMaxVertices> order_{};
    std::array<int, kMaxVertices + 1> edges_from_{};
    std::array<Mask, kMaxVertices> cls_{};
};

inline ColoringPartition to_partition(std::span<const Mask> classes) {
    ColoringPartition p;
    for (Mask m : classes) p.classes.emplace_back(m);
    return p;
}

} // namespace abperfect::detail

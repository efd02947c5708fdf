#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "abperfect/solvers.hpp"
#include "partition_search.hpp"

namespace abperfect {

using detail::PartitionSearch;

namespace {

// Orders the classes so that every vertex of a class has a neighbor in each
// class placed below it. above[i] is the set of classes that every vertex of
// class i sees; class i may go on top of the placed set S iff S is inside
// above[i]. Failed placed-sets are memoized.
class GrundyOrder {
  public:
    GrundyOrder(const Graph& g, std::span<const Mask> cls) : k_(int(cls.size())) {
        for (int i = 0; i < k_; ++i) {
            Mask ok = 0;
            for (int j = 0; j < k_; ++j) {
                if (j == i) continue;
                bool all = true;
                for (Mask m = cls[i]; m && all; m &= m - 1)
                    if (!(g.neighbors(lowest(m)) & cls[j])) all = false;
                if (all) ok |= bit(j);
            }
            above_[i] = ok;
        }
    }

    std::optional<std::vector<int>> run() {
        order_.clear();
        if (place(0)) return order_;
        return std::nullopt;
    }

  private:
    bool place(Mask placed) {
        if (popcount(placed) == k_) return true;
        if (dead_.contains(placed)) return false;
        for (int i = 0; i < k_; ++i) {
            if ((placed >> i) & 1U) continue;
            if ((placed & ~above_[i]) != 0) continue;
            order_.push_back(i);
            if (place(placed | bit(i))) return true;
            order_.pop_back();
        }
        dead_.insert(placed);
        return false;
    }

    int k_;
    std::array<Mask, kMaxVertices> above_{};
    std::vector<int> order_;
    std::unordered_set<Mask> dead_;
};

ColoringPartition largest_grundy(const Graph& g, bool proper) {
    // The vertex with the top color sees k - 1 other classes.
    for (int k = std::min(g.order(), g.max_degree() + 1); k >= 1; --k) {
        std::optional<ColoringPartition> found;
        PartitionSearch search(g, {g.all(), k, proper, true});
        search.run([&](std::span<const Mask> cls) {
            auto order = GrundyOrder(g, cls).run();
            if (!order) return false;
            ColoringPartition p;
            for (int i : *order) p.classes.emplace_back(cls[i]);
            found = std::move(p);
            return true;
        });
        if (found) return *found;
    }
    return {};
}

} // namespace

ColoringPartition grundy_coloring(const Graph& g) { return largest_grundy(g, true); }

int grundy_number(const Graph& g) { return grundy_coloring(g).size(); }

ColoringPartition pseudo_grundy_coloring(const Graph& g) { return largest_grundy(g, false); }

int pseudo_grundy_number(const Graph& g) { return pseudo_grundy_coloring(g).size(); }

int first_fit_colors(const Graph& g, const std::vector<int>& order) {
    std::array<Mask, kMaxVertices> cls{};
    int used = 0;
    for (int v : order) {
        int c = 0;
        while (g.neighbors(v) & cls[c]) ++c;
        cls[c] |= bit(v);
        used = std::max(used, c + 1);
    }
    return used;
}

int grundy_number_first_fit(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    int best = 0;
    do {
        best = std::max(best, first_fit_colors(g, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

} // namespace abperfect

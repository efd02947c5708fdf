#include <array>
#include <optional>

#include "abperfect/solvers.hpp"

namespace abperfect {

namespace {

// Searches for k disjoint connected branch sets, pairwise joined by an edge.
// Branch sets are produced in increasing order of their least vertex. Vertices
// outside every branch set are deleted, so the model need not cover the graph.
class MinorSearch {
  public:
    MinorSearch(const Graph& g, Mask within, int k) : g_(g), within_(within), k_(k) {}

    std::optional<MinorModel> run() {
        if (!place(0, within_, -1)) return std::nullopt;
        MinorModel m;
        for (int i = 0; i < k_; ++i) m.branch_sets.emplace_back(sets_[i]);
        return m;
    }

  private:
    bool joined_to_all(Mask s, int placed) const {
        const Mask reach = neighborhood(g_, s);
        for (int j = 0; j < placed; ++j)
            if (!(reach & sets_[j])) return false;
        return true;
    }

    bool place(int i, Mask avail, int last_min) {
        if (i == k_) return true;
        const Mask eligible = avail & ~low_mask(last_min + 1);
        if (popcount(eligible) < k_ - i) return false;

        if (i == k_ - 1) {
            // Any connected set can grow to its whole component, so testing
            // the components of the eligible vertices is enough.
            for (Mask left = eligible; left;) {
                Mask comp = reach(g_, bit(lowest(left)), eligible);
                left &= ~comp;
                if (joined_to_all(comp, i)) {
                    sets_[i] = comp;
                    return true;
                }
            }
            return false;
        }

        for (Mask roots = eligible; roots; roots &= roots - 1) {
            const int v = lowest(roots);
            const Mask pool = eligible & ~low_mask(v);
            // Later sets need k - i - 1 vertices above v outside this one.
            if (popcount(pool) - 1 < k_ - i - 1) break;
            if (grow(i, bit(v), g_.neighbors(v) & pool, 0, pool, avail, v)) return true;
        }
        return false;
    }

    // Enumerates each connected subset of `pool` containing the root exactly
    // once: `frontier` holds candidates adjacent to `set`, `banned` holds
    // vertices already decided to stay out.
    bool grow(int i, Mask set, Mask frontier, Mask banned, Mask pool, Mask avail, int root) {
        if (popcount(pool & ~set) < k_ - i - 1) return false;
        if (joined_to_all(set, i)) {
            sets_[i] = set;
            if (place(i + 1, avail & ~set, root)) return true;
        }
        Mask options = frontier & ~banned;
        while (options) {
            const int u = lowest(options);
            options &= ~bit(u);
            const Mask next = set | bit(u);
            if (grow(i, next, (frontier | g_.neighbors(u)) & pool & ~next, banned, pool, avail, root))
                return true;
            banned |= bit(u);
        }
        return false;
    }

    const Graph& g_;
    Mask within_;
    int k_;
    std::array<Mask, kMaxVertices> sets_{};
};

int component_edges(const Graph& g, Mask comp) {
    int twice = 0;
    for (Mask m = comp; m; m &= m - 1) twice += popcount(g.neighbors(lowest(m)) & comp);
    return twice / 2;
}

} // namespace

MinorModel hadwiger_minor(const Graph& g) {
    // A maximum clique is a minor model with singleton branch sets.
    MinorModel best;
    for (int v : maximum_clique(g).vertices()) best.branch_sets.emplace_back(bit(v));
    for (VertexSet comp : components(g)) {
        const int edges = component_edges(g, comp.bits());
        for (int k = best.size() + 1; k <= comp.size() && k * (k - 1) / 2 <= edges; ++k) {
            auto model = MinorSearch(g, comp.bits(), k).run();
            if (!model) break;
            best = std::move(*model);
        }
    }
    return best;
}

int hadwiger_number(const Graph& g) { return hadwiger_minor(g).size(); }

} // namespace abperfect

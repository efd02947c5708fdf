#include <array>

#include "abperfect/solvers.hpp"

namespace abperfect {

namespace {

// Branch and bound; the bound is the number of colors a greedy coloring of
// the candidate set needs.
class MaxClique {
  public:
    explicit MaxClique(const Graph& g) : g_(g) {}

    VertexSet run() {
        expand(0, g_.all());
        return VertexSet(best_);
    }

  private:
    void expand(Mask current, Mask candidates) {
        if (!candidates) {
            if (popcount(current) > popcount(best_)) best_ = current;
            return;
        }
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> bound{};
        int count = 0;
        int color = 0;
        for (Mask uncolored = candidates; uncolored;) {
            ++color;
            Mask avail = uncolored;
            while (avail) {
                int v = lowest(avail);
                avail &= ~bit(v) & ~g_.neighbors(v);
                uncolored &= ~bit(v);
                order[count] = v;
                bound[count++] = color;
            }
        }
        const int size = popcount(current);
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= popcount(best_)) return;
            int v = order[i];
            expand(current | bit(v), candidates & g_.neighbors(v));
            candidates &= ~bit(v);
        }
    }

    const Graph& g_;
    Mask best_ = 0;
};

} // namespace

VertexSet maximum_clique(const Graph& g) { return MaxClique(g).run(); }

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

} // namespace abperfect

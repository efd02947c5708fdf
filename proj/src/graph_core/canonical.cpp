#include "abperfect/canonical.hpp"

#include <array>

#include "abperfect/graph6.hpp"

namespace abperfect {

namespace {

// graph6 lists the upper triangle column by column, so fixing the vertices at
// positions 0..m fixes every bit up to the end of column m. Column m, read
// with row 0 as the most significant bit, is the adjacency of position m to
// positions 0..m-1; minimising columns in order minimises the whole string.
class LeastLabeling {
  public:
    explicit LeastLabeling(const Graph& g) : g_(g), n_(g.order()) {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                twin_[u] |= Mask((u != v && (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))))
                            << v;
    }

    std::vector<int> run() {
        extend(0, g_.all());
        return {best_perm_.begin(), best_perm_.begin() + n_};
    }

  private:
    // Column for placing c at position m, given positions 0..m-1.
    Mask column(int m, int c) const {
        Mask col = 0;
        for (int i = 0; i < m; ++i) col = (col << 1) | Mask(g_.adjacent(perm_[i], c));
        return col;
    }

    // -1, 0, 1 comparing cols_[1..m] with best_cols_[1..m].
    int compare_prefix(int m) const {
        for (int i = 1; i <= m; ++i) {
            if (cols_[i] != best_cols_[i]) return cols_[i] < best_cols_[i] ? -1 : 1;
        }
        return 0;
    }

    void extend(int m, Mask unplaced) {
        if (m == n_) {
            if (!have_best_ || compare_prefix(n_ - 1) < 0) {
                have_best_ = true;
                best_cols_ = cols_;
                best_perm_ = perm_;
            }
            return;
        }
        Mask least = ~Mask{0};
        for (Mask r = unplaced; r; r &= r - 1) least = std::min(least, column(m, lowest(r)));
        cols_[m] = least;
        if (have_best_ && compare_prefix(m) > 0) return;

        Mask tried = 0;
        for (Mask r = unplaced; r; r &= r - 1) {
            int c = lowest(r);
            if (column(m, c) != least) continue;
            // Swapping twins is an automorphism fixing every placed vertex.
            if (twin_[c] & tried) continue;
            tried |= bit(c);
            perm_[m] = c;
            extend(m + 1, unplaced & ~bit(c));
            // A better leaf found below may make this prefix a loser.
            if (compare_prefix(m) > 0) return;
        }
    }

    const Graph& g_;
    int n_;
    std::array<Mask, kMaxVertices> twin_{};
    std::array<int, kMaxVertices> perm_{};
    std::array<Mask, kMaxVertices> cols_{};
    std::array<int, kMaxVertices> best_perm_{};
    std::array<Mask, kMaxVertices> best_cols_{};
    bool have_best_ = false;
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    auto labeling = LeastLabeling(g).run();
    std::vector<int> position(g.order());
    for (int i = 0; i < g.order(); ++i) position[labeling[i]] = i;
    return {CanonicalKey{emit_graph6(g.permuted(position))}, std::move(labeling)};
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

Graph canonical_graph(const Graph& g) { return parse_graph6(canonical_form(g).key.bytes); }

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() &&
           canonical_key(a) == canonical_key(b);
}

} // namespace abperfect

#include "abperfect/graph.hpp"


namespace abperfect {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw GraphError("graph order must be in 1..32, got " + std::to_string(n));
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::from_rows(int n, const Mask* rows) {
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~g.all()) throw GraphError("adjacency row exceeds graph order");
        if ((rows[v] >> v) & 1U) throw GraphError("self-loop at vertex " + std::to_string(v));
        g.adj_[v] = rows[v];
    }
    for (int u = 0; u < n; ++u)
        for (Mask m = rows[u]; m; m &= m - 1)
            if (!((rows[lowest(m)] >> u) & 1U)) throw GraphError("asymmetric adjacency rows");
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (Mask m = adj_[u] & ~low_mask(u + 1); m; m &= m - 1) out.emplace_back(u, lowest(m));
    return out;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    Graph out(n_);
    for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycles need at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), e);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw GraphError("induced subgraph of an empty vertex set");
    if (s.bits() & ~g.all()) throw GraphError("vertex set exceeds graph order");
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for (Mask m = s.bits(); m; m &= m - 1) index[lowest(m)] = k++;
    std::vector<std::pair<int, int>> e;
    for (Mask m = s.bits(); m; m &= m - 1) {
        int u = lowest(m);
        for (Mask r = g.neighbors(u) & s.bits() & ~low_mask(u + 1); r; r &= r - 1)
            e.emplace_back(index[u], index[lowest(r)]);
    }
    return Graph(k, e);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(g.order(), e);
}

Mask reach(const Graph& g, Mask from, Mask within) {
    Mask seen = from & within;
    Mask frontier = seen;
    while (frontier) {
        Mask next = neighborhood(g, frontier) & within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    Mask left = g.all();
    while (left) {
        Mask c = reach(g, bit(lowest(left)), left);
        out.emplace_back(c);
        left &= ~c;
    }
    return out;
}

bool is_connected(const Graph& g) { return reach(g, 1U, g.all()) == g.all(); }

bool is_connected_subset(const Graph& g, VertexSet s) {
    if (s.empty()) throw GraphError("connectivity of an empty vertex set");
    return reach(g, bit(s.min()), s.bits()) == s.bits();
}

bool sets_adjacent(const Graph& g, VertexSet s, VertexSet t) {
    if (s.empty() || t.empty()) throw GraphError("adjacency test on an empty vertex set");
    if (s.bits() & t.bits()) throw GraphError("adjacency test on overlapping vertex sets");
    return (neighborhood(g, s.bits()) & t.bits()) != 0;
}

} // namespace abperfect

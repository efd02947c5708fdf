#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abperfect {

using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 32;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_mask(int n) { return n >= 32 ? ~Mask{0} : (bit(n) - 1); }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

/// A subset of the vertices of some ambient graph.
class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) bits_ |= bit(v);
    }

    constexpr Mask bits() const { return bits_; }
    constexpr int size() const { return popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr int min() const { return lowest(bits_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (Mask m = bits_; m; m &= m - 1) out.push_back(lowest(m));
        return out;
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

  private:
    Mask bits_ = 0;
};

/// Thrown when a graph is built from an invalid vertex count or edge.
class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on 1..32 vertices with one adjacency word per vertex.
class Graph {
  public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);
    /// Build from adjacency rows; rows must be symmetric and loop-free.
    static Graph from_rows(int n, const Mask* rows);

    int order() const { return n_; }
    Mask neighbors(int v) const { return adj_[v]; }
    Mask all() const { return low_mask(n_); }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return popcount(adj_[v]); }
    int max_degree() const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Graph obtained by relabeling vertex v as perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    void add_edge(int u, int v);

    int n_;
    std::array<Mask, kMaxVertices> adj_{};
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Disjoint union; vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph induced_subgraph(const Graph& g, VertexSet s);
Graph complement(const Graph& g);
/// Connected components ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, VertexSet s);
bool sets_adjacent(const Graph& g, VertexSet s, VertexSet t);

/// Vertices reachable from `from` without leaving `within`.
Mask reach(const Graph& g, Mask from, Mask within);

/// Union of the neighborhoods of the vertices in s.
inline Mask neighborhood(const Graph& g, Mask s) {
    Mask out = 0;
    for (Mask m = s; m; m &= m - 1) out |= g.neighbors(lowest(m));
    return out;
}

} // namespace abperfect

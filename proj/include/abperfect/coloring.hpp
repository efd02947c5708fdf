#pragma once

#include <vector>

#include "abperfect/graph.hpp"

namespace abperfect {

/// Surjective coloring stored as its color classes; class i has color i + 1.
struct ColoringPartition {
    std::vector<VertexSet> classes;

    int size() const { return int(classes.size()); }
    /// color[v] in 1..size(), 0 for vertices outside every class.
    std::vector<int> colors(int n) const;

    friend bool operator==(const ColoringPartition&, const ColoringPartition&) = default;
};

/// k pairwise adjacent, connected, disjoint branch sets of a K_k minor.
struct MinorModel {
    std::vector<VertexSet> branch_sets;

    int size() const { return int(branch_sets.size()); }
};

// Defining predicates, checked directly against the definitions.
bool is_partition_of(const ColoringPartition& c, Mask vertices);
bool is_proper(const Graph& g, const ColoringPartition& c);
bool is_complete(const Graph& g, const ColoringPartition& c);
bool is_connected_coloring(const Graph& g, const ColoringPartition& c);
/// Every class holds a vertex with a neighbor in every other class.
bool is_dominating(const Graph& g, const ColoringPartition& c);
/// Every vertex of class i has a neighbor in each class j < i.
bool is_pseudo_grundy(const Graph& g, const ColoringPartition& c);
bool is_minor_model(const Graph& g, const MinorModel& m);

} // namespace abperfect

#include "abperfect/coloring.hpp"

namespace abperfect {

std::vector<int> ColoringPartition::colors(int n) const {
    std::vector<int> out(n, 0);
    for (int i = 0; i < size(); ++i)
        for (int v : classes[i].vertices()) out[v] = i + 1;
    return out;
}

bool is_partition_of(const ColoringPartition& c, Mask vertices) {
    Mask seen = 0;
    for (auto cls : c.classes) {
        if (cls.empty() || (cls.bits() & seen)) return false;
        seen |= cls.bits();
    }
    return seen == vertices;
}

bool is_proper(const Graph& g, const ColoringPartition& c) {
    for (auto cls : c.classes)
        if (neighborhood(g, cls.bits()) & cls.bits()) return false;
    return true;
}

bool is_complete(const Graph& g, const ColoringPartition& c) {
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            if (!sets_adjacent(g, c.classes[i], c.classes[j])) return false;
    return true;
}

bool is_connected_coloring(const Graph& g, const ColoringPartition& c) {
    for (auto cls : c.classes)
        if (!is_connected_subset(g, cls)) return false;
    return true;
}

bool is_dominating(const Graph& g, const ColoringPartition& c) {
    for (int i = 0; i < c.size(); ++i) {
        bool found = false;
        for (int v : c.classes[i].vertices()) {
            bool all = true;
            for (int j = 0; j < c.size() && all; ++j)
                if (j != i && !(g.neighbors(v) & c.classes[j].bits())) all = false;
            if (all) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool is_pseudo_grundy(const Graph& g, const ColoringPartition& c) {
    for (int i = 0; i < c.size(); ++i)
        for (int v : c.classes[i].vertices())
            for (int j = 0; j < i; ++j)
                if (!(g.neighbors(v) & c.classes[j].bits())) return false;
    return true;
}

bool is_minor_model(const Graph& g, const MinorModel& m) {
    Mask seen = 0;
    for (auto s : m.branch_sets) {
        if (s.empty() || (s.bits() & seen) || (s.bits() & ~g.all())) return false;
        if (!is_connected_subset(g, s)) return false;
        seen |= s.bits();
    }
    for (int i = 0; i < m.size(); ++i)
        for (int j = i + 1; j < m.size(); ++j)
            if (!sets_adjacent(g, m.branch_sets[i], m.branch_sets[j])) return false;
    return true;
}

} // namespace abperfect

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abperfect/graph.hpp"
#include "abperfect/pattern.hpp"

namespace abperfect {

/// Why a graph is not in a class: a named pattern occurrence, or an induced
/// cycle listed in cycle order.
struct ClassWitness {
    std::string pattern;
    Embedding vertices;
    /// The witness lives in the complement (Berge recognition only).
    bool in_complement = false;
};

struct ClassVerdict {
    bool member = true;
    std::optional<ClassWitness> witness;

    explicit operator bool() const { return member; }
};

/// Chordality by lexicographic BFS and a perfect-elimination check. On
/// rejection the witness is an induced cycle on at least four vertices.
ClassVerdict is_chordal(const Graph& g);

/// Reverse of the LexBFS visit order (lowest index breaks ties).
std::vector<int> lex_bfs_elimination_order(const Graph& g);

/// Member iff no pattern of the family is induced; the witness is the first
/// pattern (in family order) that occurs.
ClassVerdict is_free(const Graph& g, const std::vector<Pattern>& family);

/// (C4, P4)-free.
ClassVerdict is_trivially_perfect(const Graph& g);

inline constexpr int kMaxBergeOrder = 12;

/// No induced odd cycle of length >= 5 in g or its complement; n <= 12.
ClassVerdict is_berge(const Graph& g);

/// True iff the listed vertices induce a chordless cycle in that order.
bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle);

} // namespace abperfect

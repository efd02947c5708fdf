#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "abperfect/graph.hpp"

namespace abperfect {

inline constexpr int kMaxEnumerationOrder = 8;

/// One representative per isomorphism class on n vertices (1 <= n <= 8),
/// each in canonical labeling, sorted by canonical key.
std::vector<Graph> enumerate_graphs(int n);

/// All classes of order 1..max_order, ordered by order then key.
std::vector<Graph> enumerate_up_to(int max_order);

struct Graph6Line {
    int line_number = 0;
    std::string text;
    std::optional<Graph> graph;
    std::string error;
};

/// Read graph6 lines, skipping blank lines and the optional ">>graph6<<" header.
/// Lines that fail to parse are kept with their error message.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

} // namespace abperfect

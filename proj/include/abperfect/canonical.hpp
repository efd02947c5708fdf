#pragma once

#include <string>
#include <vector>

#include "abperfect/graph.hpp"

namespace abperfect {

/// Lexicographically least graph6 encoding over all vertex relabelings.
/// Equal keys exactly for isomorphic graphs.
struct CanonicalKey {
    std::string bytes;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
    CanonicalKey key;
    /// labeling[new position] = original vertex.
    std::vector<int> labeling;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
/// The relabeled graph whose graph6 encoding is the key.
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

} // namespace abperfect

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abperfect/graph.hpp"

namespace abperfect {

struct Pattern {
    std::string name;
    int order = 0;
    std::vector<std::pair<int, int>> edges;

    Graph graph() const { return Graph(order, edges); }
};

class PatternError : public std::runtime_error {
  public:
    PatternError(int line, const std::string& what)
        : std::runtime_error("pattern catalog line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Named pattern set loaded from `order=k name: u-v, ...` lines.
class PatternCatalog {
  public:
    static PatternCatalog parse(std::string_view text);
    static PatternCatalog load(const std::string& path);
    /// The catalog shipped in data/patterns.txt, compiled in.
    static const PatternCatalog& builtin();

    const Pattern& at(std::string_view name) const;
    bool contains(std::string_view name) const;
    std::vector<Pattern> family(const std::vector<std::string>& names) const;
    const std::vector<Pattern>& patterns() const { return patterns_; }
    /// FNV-1a of the catalog text, rendered as 16 hex digits.
    const std::string& hash() const { return hash_; }

  private:
    std::vector<Pattern> patterns_;
    std::string hash_;
};

std::string fnv1a_hex(std::string_view text);

/// Injective map from pattern vertices to graph vertices (image[i] is the
/// graph vertex playing pattern vertex i).
using Embedding = std::vector<int>;

/// Lexicographically least induced embedding of p into g, if any.
std::optional<Embedding> find_induced(const Graph& g, const Pattern& p);
std::optional<Embedding> find_induced(const Graph& g, const Graph& pattern);

} // namespace abperfect

#include "abperfect/enumerate.hpp"

#include <array>
#include <set>
#include <stdexcept>

#include "abperfect/canonical.hpp"
#include "abperfect/graph6.hpp"

namespace abperfect {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::out_of_range("enumeration order must be in 1..8, got " + std::to_string(n));
}

// Every graph on n vertices is some (n-1)-vertex class plus one vertex joined
// to an arbitrary subset, so extending each parent by every neighborhood and
// deduplicating by key reaches every class exactly once.
std::vector<Graph> extend_level(const std::vector<Graph>& parents, int n) {
    std::set<std::string> keys;
    std::array<Mask, kMaxVertices> rows{};
    const int last = n - 1;
    for (const Graph& parent : parents) {
        for (Mask nbrs = 0; nbrs <= low_mask(last); ++nbrs) {
            for (int v = 0; v < last; ++v) rows[v] = parent.neighbors(v) | (((nbrs >> v) & 1U) << last);
            rows[last] = nbrs;
            keys.insert(canonical_key(Graph::from_rows(n, rows.data())).bytes);
        }
    }
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(parse_graph6(k));
    return out;
}

} // namespace

std::vector<Graph> enumerate_graphs(int n) {
    check_order(n);
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) level = extend_level(level, k);
    return level;
}

std::vector<Graph> enumerate_up_to(int max_order) {
    check_order(max_order);
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1)};
    out.push_back(level.front());
    for (int k = 2; k <= max_order; ++k) {
        level = extend_level(level, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
    static constexpr std::string_view kHeader = ">>graph6<<";
    std::vector<Graph6Line> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::string_view body = line;
        if (body.starts_with(kHeader)) body.remove_prefix(kHeader.size());
        if (body.empty()) continue;
        Graph6Line rec;
        rec.line_number = number;
        rec.text = std::string(body);
        try {
            rec.graph = parse_graph6(body);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace abperfect

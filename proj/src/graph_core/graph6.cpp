#include "abperfect/graph6.hpp"

namespace abperfect {

namespace {

constexpr int kOffset = 63;

[[noreturn]] void fail(Graph6Error::Kind kind, std::size_t offset, const std::string& detail) {
    throw Graph6Error(kind, offset, detail);
}

} // namespace

Graph6Error::Graph6Error(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error("graph6 " + std::string(to_string(kind)) + " at byte " +
                         std::to_string(offset) + ": " + what),
      kind_(kind), offset_(offset) {}

const char* to_string(Graph6Error::Kind kind) {
    switch (kind) {
    case Graph6Error::Kind::empty_input: return "empty input";
    case Graph6Error::Kind::malformed_length: return "malformed length";
    case Graph6Error::Kind::byte_out_of_range: return "byte out of range";
    case Graph6Error::Kind::zero_order: return "zero order";
    case Graph6Error::Kind::order_too_large: return "order too large";
    case Graph6Error::Kind::truncated: return "truncated";
    case Graph6Error::Kind::trailing_garbage: return "trailing garbage";
    case Graph6Error::Kind::nonzero_padding: return "nonzero padding";
    }
    return "unknown";
}

Graph parse_graph6(std::string_view line) {
    if (line.empty()) fail(Graph6Error::Kind::empty_input, 0, "no bytes");
    for (std::size_t i = 0; i < line.size(); ++i) {
        auto c = static_cast<unsigned char>(line[i]);
        if (c < kOffset || c > 126)
            fail(Graph6Error::Kind::byte_out_of_range, i,
                 "byte " + std::to_string(int(c)) + " outside 63..126");
    }

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != 126) {
        n = line[0] - kOffset;
        pos = 1;
    } else {
        // 126 prefix means n >= 63, which is always above our cap; decode only to report it.
        if (line.size() < 4) fail(Graph6Error::Kind::truncated, line.size(), "incomplete order prefix");
        n = (long(line[1] - kOffset) << 12) | (long(line[2] - kOffset) << 6) | long(line[3] - kOffset);
        if (n < 63)
            fail(Graph6Error::Kind::malformed_length, 1, "long-form order prefix with order " + std::to_string(n));
        fail(Graph6Error::Kind::order_too_large, 0, "order " + std::to_string(n) + " exceeds 32");
    }
    if (n == 0) fail(Graph6Error::Kind::zero_order, 0, "graph with no vertices");
    if (n > kMaxVertices) fail(Graph6Error::Kind::order_too_large, 0, "order " + std::to_string(n) + " exceeds 32");

    const std::size_t nbits = std::size_t(n) * std::size_t(n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() < pos + nbytes)
        fail(Graph6Error::Kind::truncated, line.size(),
             "expected " + std::to_string(nbytes) + " edge bytes for order " + std::to_string(n));
    if (line.size() > pos + nbytes)
        fail(Graph6Error::Kind::trailing_garbage, pos + nbytes, "extra bytes after edge data");

    std::array<Mask, kMaxVertices> rows{};
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = line[pos + k / 6] - kOffset;
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    if (nbits % 6 != 0) {
        int last = line[pos + nbytes - 1] - kOffset;
        int pad = 6 - int(nbits % 6);
        if (last & ((1 << pad) - 1))
            fail(Graph6Error::Kind::nonzero_padding, pos + nbytes - 1, "padding bits must be zero");
    }
    return Graph::from_rows(int(n), rows.data());
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out(1, char(n + kOffset));
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | int(g.adjacent(i, j));
            if (++filled == 6) {
                out.push_back(char(chunk + kOffset));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(char((chunk << (6 - filled)) + kOffset));
    return out;
}

} // namespace abperfect

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "abperfect/graph.hpp"

namespace abperfect {

class Graph6Error : public std::runtime_error {
  public:
    enum class Kind {
        empty_input,
        malformed_length,
        byte_out_of_range,
        zero_order,
        order_too_large,
        truncated,
        trailing_garbage,
        nonzero_padding,
    };

    Graph6Error(Kind kind, std::size_t offset, const std::string& what);

    Kind kind() const { return kind_; }
    /// Byte offset into the input line where the problem was detected.
    std::size_t offset() const { return offset_; }

  private:
    Kind kind_;
    std::size_t offset_;
};

const char* to_string(Graph6Error::Kind kind);

/// Decode one graph6 line (no header, no newline).
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

} // namespace abperfect

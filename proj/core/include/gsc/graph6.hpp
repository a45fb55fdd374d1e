#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gsc/graph.hpp"

namespace gsc {

/// Error raised for a malformed graph6 line. `offset` is the byte offset
/// of the offending character (== line length when input ended early).
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decode one header-free short-form graph6 line (n <= 62). Strict: every
/// character must be in [63, 126], the line must contain exactly the bytes
/// the order requires, and padding bits must be zero.
Graph from_graph6(std::string_view line);

/// Encode to short-form graph6. Throws std::invalid_argument for graphs
/// with more than 62 vertices (the short form stops there).
std::string to_graph6(const Graph& g);

}  // namespace gsc

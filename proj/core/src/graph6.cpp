#include "gsc/graph6.hpp"

#include <stdexcept>

namespace gsc {

// Short form: one byte n+63, then the upper triangle in column order
// ((0,1),(0,2),(1,2),(0,3),...) packed 6 bits per byte, most significant
// bit first, each byte offset by 63. Final byte zero-padded.

Graph from_graph6(std::string_view line) {
  if (line.empty()) throw Graph6ParseError(0, "empty line");

  auto value_at = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      throw Graph6ParseError(i, "character out of the printable graph6 range [63, 126]");
    return c - 63;
  };

  int head = value_at(0);
  if (head == 63)
    throw Graph6ParseError(0, "long-form length marker; only the short form (n <= 62) is supported");
  int n = head;  // 0..62

  std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t need = 1 + (pair_bits + 5) / 6;
  if (line.size() < need)
    throw Graph6ParseError(line.size(), "line ends before the edge bits do (need " +
                                            std::to_string(need) + " bytes)");
  if (line.size() > need)
    throw Graph6ParseError(need, "trailing characters after the edge bits");

  Graph g(n);
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      int byte = value_at(1 + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(row, col);
    }
  }
  // The pad bits of the final byte must be zero for the encoding to be
  // unique; reject anything else so decode(encode(g)) is a true inverse.
  for (; bit < (pair_bits + 5) / 6 * 6; ++bit) {
    int byte = value_at(1 + bit / 6);
    if ((byte >> (5 - bit % 6)) & 1)
      throw Graph6ParseError(1 + bit / 6, "nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6 short form stops at 62 vertices, got " + std::to_string(n));

  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = acc << 1 | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace gsc

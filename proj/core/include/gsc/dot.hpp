#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

/// Rendering hints for to_dot: vertices in `filled_vertices` get a filled
/// style (used for cutsets), edges in `bold_edges` get a bold colored style
/// (used for matching cuts).
struct DotStyle {
  std::string graph_name = "G";
  VertexSet filled_vertices;
  std::vector<std::pair<int, int>> bold_edges;
};

/// Graphviz rendering listing every vertex and every edge exactly once.
std::string to_dot(const Graph& g, const DotStyle& style = {});

}  // namespace gsc

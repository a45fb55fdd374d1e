#include "gsc/dot.hpp"

#include <algorithm>
#include <sstream>

namespace gsc {

std::string to_dot(const Graph& g, const DotStyle& style) {
  std::ostringstream out;
  out << "graph " << style.graph_name << " {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (style.filled_vertices.contains(v)) out << " [style=filled, fillcolor=gray80]";
    out << ";\n";
  }
  auto is_bold = [&](int u, int v) {
    return std::find_if(style.bold_edges.begin(), style.bold_edges.end(), [&](auto e) {
             return (e.first == u && e.second == v) || (e.first == v && e.second == u);
           }) != style.bold_edges.end();
  };
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (is_bold(u, v)) out << " [style=bold, color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gsc

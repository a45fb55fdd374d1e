#include "gsc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gsc {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in [0, " + std::to_string(kMaxVertices) + "], got " +
                                std::to_string(n));
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= 1ull << v;
  adj_[v] |= 1ull << u;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
    for (std::uint64_t b = higher; b; b &= b - 1) out.emplace_back(u, std::countr_zero(b));
  }
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  std::uint64_t todo = within.bits();
  while (todo) {
    std::uint64_t comp = todo & -todo;  // start from the smallest unvisited vertex
    for (;;) {
      std::uint64_t frontier = comp;
      std::uint64_t grown = comp;
      for (std::uint64_t b = frontier; b; b &= b - 1)
        grown |= g.neighbors(std::countr_zero(b)).bits();
      grown &= within.bits();
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(VertexSet(comp));
    todo &= ~comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  std::uint64_t comp = 1;
  std::uint64_t all = g.vertices().bits();
  for (;;) {
    std::uint64_t grown = comp;
    for (std::uint64_t b = comp; b; b &= b - 1) grown |= g.neighbors(std::countr_zero(b)).bits();
    grown &= all;
    if (grown == comp) break;
    comp = grown;
  }
  return comp == all;
}

VertexSet common_neighbors(const Graph& g, int x, int y) {
  assert(x != y);
  return g.neighbors(x) & g.neighbors(y);
}

std::vector<VertexSet> triangles(const Graph& g) {
  std::vector<VertexSet> out;
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    std::uint64_t js = g.neighbors(i).bits() >> (i + 1) << (i + 1);
    for (std::uint64_t jb = js; jb; jb &= jb - 1) {
      int j = std::countr_zero(jb);
      std::uint64_t ks = g.neighbors(i).bits() & g.neighbors(j).bits();
      ks = ks >> (j + 1) << (j + 1);
      for (std::uint64_t kb = ks; kb; kb &= kb - 1)
        out.push_back(VertexSet::of({i, j, std::countr_zero(kb)}));
    }
  }
  return out;
}

namespace {

// Shared by both identification operations: merge everything in s into
// min(s), shift the remaining ids down, translate edges.
Relabeling contract(const Graph& g, VertexSet s) {
  int n = g.vertex_count();
  int keep = s.min();
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (s.contains(v) && v != keep) continue;
    map[static_cast<std::size_t>(v)] = next++;
  }
  for (int v = 0; v < n; ++v)
    if (s.contains(v)) map[static_cast<std::size_t>(v)] = map[static_cast<std::size_t>(keep)];

  Graph out(next);
  for (auto [u, v] : g.edges()) {
    int mu = map[static_cast<std::size_t>(u)];
    int mv = map[static_cast<std::size_t>(v)];
    if (mu != mv) out.add_edge(mu, mv);
  }
  return {std::move(out), std::move(map)};
}

}  // namespace

Relabeling identify_vertices(const Graph& g, int x, int y) {
  int n = g.vertex_count();
  if (x < 0 || x >= n || y < 0 || y >= n || x == y)
    throw std::invalid_argument("identify_vertices needs two distinct vertices");
  if (g.has_edge(x, y))
    throw std::invalid_argument("identify_vertices: vertices are adjacent");
  return contract(g, VertexSet::of({x, y}));
}

Relabeling identify_set(const Graph& g, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("identify_set: empty set");
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("identify_set: vertex out of range");
  return contract(g, s);
}

Graph induced_subgraph(const Graph& g, VertexSet s, std::vector<int>* old_to_new) {
  int n = g.vertex_count();
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (s.contains(v)) map[static_cast<std::size_t>(v)] = next++;

  Graph out(next);
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v))
      out.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

}  // namespace gsc

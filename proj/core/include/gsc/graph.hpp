#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace gsc {

/// Vertex ids are dense non-negative indices in [0, n).
using VertexId = int;

/// Largest supported graph order. Everything in this library runs on
/// desk-scale graphs, so one 64-bit word per adjacency row is enough
/// (62 also matches the short graph6 form, see graph6.hpp).
inline constexpr int kMaxVertices = 62;

/// Set of vertices as a bitmask over [0, 64). Cheap to copy, compare,
/// intersect; iteration is always in ascending id order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> ids) {
    VertexSet s;
    for (int v : ids) s.add(v);
    return s;
  }

  /// All of {0, ..., n-1}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }

  void add(int v) { bits_ |= 1ull << v; }
  void remove(int v) { bits_ &= ~(1ull << v); }

  /// Smallest member, or -1 when empty.
  int min() const { return bits_ ? std::countr_zero(bits_) : -1; }

  bool intersects(const VertexSet& o) const { return bits_ & o.bits_; }
  bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph: symmetric, irreflexive adjacency over dense
/// vertex ids. One bitmask row per vertex; values are immutable once
/// construction is done and are safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);

  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Edges as (u, v) with u < v, ascending lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Connected components as vertex sets, ordered by smallest member.
/// Their union is the whole vertex set; an empty graph has none.
std::vector<VertexSet> components(const Graph& g);

/// Components of the subgraph induced by `within` (other vertices ignored).
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

/// True iff g has exactly one component. The empty graph is not connected.
bool is_connected(const Graph& g);

/// N(x)∩N(y) for distinct vertices x, y.
VertexSet common_neighbors(const Graph& g, int x, int y);

/// All triangles {i,j,k}, i<j<k, in lexicographic order of the sorted ids.
std::vector<VertexSet> triangles(const Graph& g);

/// Result of a vertex identification: the new graph plus the map from old
/// ids to new ids (old id -> new dense id).
struct Relabeling {
  Graph graph;
  std::vector<int> old_to_new;
};

/// Identify two non-adjacent vertices. The merged vertex keeps the smaller
/// of the two old ids; remaining ids are shifted down to stay dense.
/// The edge count drops by exactly |N(x)∩N(y)|.
Relabeling identify_vertices(const Graph& g, int x, int y);

/// Identify all of s (|s| >= 1) into one vertex whose neighborhood is the
/// union of neighborhoods outside s. Ids are re-densified the same way.
Relabeling identify_set(const Graph& g, VertexSet s);

/// Subgraph induced by s, with vertices renumbered ascending. When
/// old_to_new is non-null it receives the id map (-1 for dropped vertices).
Graph induced_subgraph(const Graph& g, VertexSet s, std::vector<int>* old_to_new = nullptr);

}  // namespace gsc

// Brute-force oracles, written independently of the library internals so
// tests can cross-check search results against first-principles
// enumeration. They share only the Graph container with the code under
// test; connectivity, subset iteration, and the predicates themselves are
// reimplemented from the definitions.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gsc/graph.hpp"

namespace oracles {

using Mask = std::uint64_t;

inline bool mask_has(Mask m, int v) { return (m >> v) & 1; }

// Connectivity of the subgraph induced on `keep`, by plain DFS.
inline bool connected_within(const gsc::Graph& g, Mask keep) {
  const int n = g.vertex_count();
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (mask_has(keep, v)) start = v;
  if (start < 0) return true;
  std::vector<int> stack{start};
  Mask seen = Mask{1} << start;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (mask_has(keep, w) && !mask_has(seen, w) && g.has_edge(v, w)) {
        seen |= Mask{1} << w;
        stack.push_back(w);
      }
  }
  return seen == keep;
}

inline bool connected(const gsc::Graph& g) {
  if (g.vertex_count() == 0) return true;
  return connected_within(g, (Mask{1} << g.vertex_count()) - 1);
}

inline bool stable(const gsc::Graph& g, Mask s) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mask_has(s, v))
      for (int w = v + 1; w < g.vertex_count(); ++w)
        if (mask_has(s, w) && g.has_edge(v, w)) return false;
  return true;
}

// True when removing `s` leaves at least two components.
inline bool cuts(const gsc::Graph& g, Mask s) {
  Mask rest = ((Mask{1} << g.vertex_count()) - 1) & ~s;
  if (rest == 0) return false;
  return !connected_within(g, rest);
}

// Smallest stable cutset in subset-of-integers order, if any.
inline std::optional<Mask> brute_stable_cutset(const gsc::Graph& g) {
  const Mask all = (Mask{1} << g.vertex_count()) - 1;
  for (Mask s = 1; s < all; ++s)
    if (stable(g, s) && cuts(g, s)) return s;
  return std::nullopt;
}

inline std::optional<Mask> brute_stable_cutset_avoiding(const gsc::Graph& g, int x) {
  const Mask all = (Mask{1} << g.vertex_count()) - 1;
  for (Mask s = 1; s < all; ++s)
    if (!mask_has(s, x) && stable(g, s) && cuts(g, s)) return s;
  return std::nullopt;
}

// A cut into two nonempty sides whose crossing edges are exactly three and
// pairwise disjoint. Sides need not induce connected subgraphs.
inline bool brute_matching_cut_3(const gsc::Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return false;
  const Mask all = (Mask{1} << n) - 1;
  // Vertex 0 pinned to side A kills the side-swap symmetry.
  for (Mask a = 1; a <= all; a += 2) {
    Mask b = all & ~a;
    if (b == 0) continue;
    std::vector<std::pair<int, int>> crossing;
    for (int v = 0; v < n; ++v)
      if (mask_has(a, v))
        for (int w = 0; w < n; ++w)
          if (mask_has(b, w) && g.has_edge(v, w)) crossing.emplace_back(v, w);
    if (crossing.size() != 3) continue;
    bool disjoint = true;
    for (std::size_t i = 0; i < 3 && disjoint; ++i)
      for (std::size_t j = i + 1; j < 3 && disjoint; ++j)
        disjoint = crossing[i].first != crossing[j].first &&
                   crossing[i].second != crossing[j].second;
    if (disjoint) return true;
  }
  return false;
}

// A cutset of three vertices inducing exactly two edges (hence a path).
inline bool brute_p3_cutset(const gsc::Graph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int edges = int(g.has_edge(a, b)) + int(g.has_edge(a, c)) + int(g.has_edge(b, c));
        if (edges != 2) continue;
        Mask s = (Mask{1} << a) | (Mask{1} << b) | (Mask{1} << c);
        if (cuts(g, s)) return true;
      }
  return false;
}

// Two triangles sharing an edge, as a subgraph: an edge {u,v} plus two
// further vertices each adjacent to both u and v.
inline bool brute_k4_minus(const gsc::Graph& g) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      int apexes = 0;
      for (int x = 0; x < n; ++x)
        if (x != u && x != v && g.has_edge(x, u) && g.has_edge(x, v)) ++apexes;
      if (apexes >= 2) return true;
    }
  return false;
}

inline bool brute_3_connected(const gsc::Graph& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  const Mask all = (Mask{1} << n) - 1;
  if (!connected_within(g, all)) return false;
  for (int u = 0; u < n; ++u) {
    if (!connected_within(g, all & ~(Mask{1} << u))) return false;
    for (int v = u + 1; v < n; ++v)
      if (!connected_within(g, all & ~(Mask{1} << u) & ~(Mask{1} << v))) return false;
  }
  return true;
}

}  // namespace oracles

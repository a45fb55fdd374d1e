#include "gsc/cutset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gsc {

namespace {

// Sides of a separation: first component group (by smallest vertex) vs the
// union of the rest. Assumes removing `cut` really disconnects.
CutCertificate certificate_for(const Graph& g, VertexSet cut) {
  auto comps = components_within(g, g.vertices() - cut);
  CutCertificate cert;
  cert.cutset = cut;
  cert.side_a = comps.front();
  for (std::size_t i = 1; i < comps.size(); ++i) cert.side_b |= comps[i];
  return cert;
}

bool is_stable(const Graph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

// Removing `cut` leaves at least two components.
bool disconnects(const Graph& g, VertexSet cut) {
  std::uint64_t rest = (g.vertices() - cut).bits();
  if (std::popcount(rest) < 2) return false;
  std::uint64_t comp = rest & -rest;
  for (;;) {
    std::uint64_t grown = comp;
    for (std::uint64_t b = comp; b; b &= b - 1) grown |= g.neighbors(std::countr_zero(b)).bits();
    grown &= rest;
    if (grown == comp) break;
    comp = grown;
  }
  return comp != rest;
}

}  // namespace

bool is_valid_stable_cutset(const Graph& g, const CutCertificate& cert) {
  if (cert.side_a.empty() || cert.side_b.empty()) return false;
  VertexSet all = cert.cutset | cert.side_a | cert.side_b;
  if (all != g.vertices()) return false;
  if (cert.cutset.intersects(cert.side_a) || cert.cutset.intersects(cert.side_b) ||
      cert.side_a.intersects(cert.side_b))
    return false;
  bool crossing = false;
  cert.side_a.for_each([&](int v) { crossing = crossing || g.neighbors(v).intersects(cert.side_b); });
  if (crossing) return false;
  return is_stable(g, cert.cutset);
}

namespace detail {

std::optional<StableCutsetCertificate> stable_cutset_by_enumeration(const Graph& g, VertexSet forbidden) {
  int n = g.vertex_count();
  std::uint64_t limit = 1ull << n;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    VertexSet s(bits);
    if (s.intersects(forbidden)) continue;
    if (!is_stable(g, s)) continue;
    if (disconnects(g, s)) return certificate_for(g, s);
  }
  return std::nullopt;
}

namespace {

// Shortest u-w path through vertices outside `banned`, or empty if none.
std::vector<int> shortest_path(const Graph& g, int u, int w, VertexSet banned) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<int> queue{u};
  VertexSet seen = VertexSet::of({u});
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == w) {
      std::vector<int> path{w};
      for (int v = w; v != u; v = parent[static_cast<std::size_t>(v)])
        path.push_back(parent[static_cast<std::size_t>(v)]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    VertexSet next = g.neighbors(cur) - seen - banned;
    next.for_each([&](int v) {
      parent[static_cast<std::size_t>(v)] = cur;
      seen.add(v);
      queue.push_back(v);
    });
  }
  return {};
}

// Exhaustive search for a stable set separating u from w. Every u-w path
// must lose an interior vertex to the cutset, so branch over the interior
// of a shortest surviving path: vertex i goes into the cutset (when the
// set stays stable) with the earlier interior vertices pinned outside.
std::optional<VertexSet> separate(const Graph& g, int u, int w, VertexSet cut, VertexSet outside) {
  std::vector<int> path = shortest_path(g, u, w, cut);
  if (path.empty()) return cut;
  VertexSet pinned = outside;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    int v = path[i];
    if (!pinned.contains(v) && !g.neighbors(v).intersects(cut)) {
      VertexSet grown = cut;
      grown.add(v);
      if (auto found = separate(g, u, w, grown, pinned)) return found;
    }
    pinned.add(v);
  }
  return std::nullopt;
}

}  // namespace

std::optional<StableCutsetCertificate> stable_cutset_by_branching(const Graph& g, VertexSet forbidden) {
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (g.has_edge(u, w)) continue;
      VertexSet outside = forbidden;
      outside.add(u);
      outside.add(w);
      if (auto cut = separate(g, u, w, {}, outside)) return certificate_for(g, *cut);
    }
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

std::optional<StableCutsetCertificate> find_impl(const Graph& g, VertexSet forbidden) {
  int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  if (!is_connected(g)) return certificate_for(g, {});
  // Enumeration is exact and fast enough through n = 20; past that, branch
  // on shortest paths between candidate separated pairs.
  if (n <= 20) return detail::stable_cutset_by_enumeration(g, forbidden);
  return detail::stable_cutset_by_branching(g, forbidden);
}

}  // namespace

std::optional<StableCutsetCertificate> find_stable_cutset(const Graph& g) {
  return find_impl(g, {});
}

std::optional<StableCutsetCertificate> find_stable_cutset_avoiding(const Graph& g, int x) {
  if (x < 0 || x >= g.vertex_count()) throw std::invalid_argument("vertex to avoid is out of range");
  return find_impl(g, VertexSet::of({x}));
}

std::optional<CliqueCutset> has_clique_cutset(const Graph& g, std::initializer_list<int> sizes) {
  if (!is_connected(g)) throw std::invalid_argument("clique cutset search expects a connected graph");
  bool want2 = false, want3 = false;
  for (int s : sizes) {
    if (s == 2) want2 = true;
    else if (s == 3) want3 = true;
    else throw std::invalid_argument("clique cutset sizes must be 2 or 3");
  }

  // Candidates in lexicographic order of their sorted id tuples; an edge
  // (a,b) precedes every triangle (a,b,*) it is a prefix of.
  std::vector<std::vector<int>> candidates;
  if (want2)
    for (auto [u, v] : g.edges()) candidates.push_back({u, v});
  if (want3)
    for (const auto& t : triangles(g)) candidates.push_back(t.to_vector());
  std::sort(candidates.begin(), candidates.end());

  for (const auto& c : candidates) {
    VertexSet clique;
    for (int v : c) clique.add(v);
    if (disconnects(g, clique)) return CliqueCutset{clique, certificate_for(g, clique)};
  }
  return std::nullopt;
}

std::optional<P3Cutset> has_p3_cutset(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("path cutset search expects a connected graph");
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        int ij = g.has_edge(i, j), ik = g.has_edge(i, k), jk = g.has_edge(j, k);
        if (ij + ik + jk != 2) continue;  // want exactly a 2-edge path
        VertexSet trio = VertexSet::of({i, j, k});
        if (!disconnects(g, trio)) continue;
        int mid = !ij ? k : (!ik ? j : i);  // the vertex on both edges
        std::array<int, 3> ends{};
        int e = 0;
        for (int v : {i, j, k})
          if (v != mid) ends[static_cast<std::size_t>(e++)] = v;
        return P3Cutset{{ends[0], mid, ends[1]}, certificate_for(g, trio)};
      }
    }
  }
  return std::nullopt;
}

bool is_valid_matching_cut(const Graph& g, const MatchingCutCertificate& cert) {
  if (cert.side_a.empty() || cert.side_b.empty()) return false;
  if ((cert.side_a | cert.side_b) != g.vertices() || cert.side_a.intersects(cert.side_b)) return false;
  VertexSet touched;
  for (auto [u, v] : cert.edges) {
    if (!g.has_edge(u, v)) return false;
    if (touched.contains(u) || touched.contains(v)) return false;  // must be a matching
    touched.add(u);
    touched.add(v);
    bool crosses = cert.side_a.contains(u) != cert.side_a.contains(v);
    if (!crosses) return false;
  }
  // No crossing edges beyond the three listed ones.
  int crossing = 0;
  cert.side_a.for_each([&](int v) { crossing += (g.neighbors(v) & cert.side_b).size(); });
  return crossing == 3;
}

std::optional<MatchingCutCertificate> has_3edge_matching_cut(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("matching cut search expects a connected graph");
  auto edges = g.edges();
  std::size_t m = edges.size();

  // A bipartition whose crossing edges are exactly {e1,e2,e3} exists iff
  // after deleting the triple each edge joins two different components and
  // the quotient (components as nodes, the triple as edges) is bipartite.
  // All other edges stay inside a component, so any proper 2-coloring of
  // the quotient gives sides crossed by exactly the triple.
  for (std::size_t a = 0; a + 2 < m; ++a) {
    for (std::size_t b = a + 1; b + 1 < m; ++b) {
      if (edges[a].first == edges[b].first || edges[a].first == edges[b].second ||
          edges[a].second == edges[b].first || edges[a].second == edges[b].second)
        continue;
      for (std::size_t c = b + 1; c < m; ++c) {
        VertexSet touched = VertexSet::of(
            {edges[a].first, edges[a].second, edges[b].first, edges[b].second});
        if (touched.contains(edges[c].first) || touched.contains(edges[c].second)) continue;

        Graph pruned(g.vertex_count());
        for (std::size_t e = 0; e < m; ++e)
          if (e != a && e != b && e != c) pruned.add_edge(edges[e].first, edges[e].second);

        auto comps = components(pruned);
        if (comps.size() < 2) continue;
        auto comp_of = [&](int v) {
          for (std::size_t i = 0; i < comps.size(); ++i)
            if (comps[i].contains(v)) return static_cast<int>(i);
          return -1;
        };

        std::array<std::pair<int, int>, 3> triple{edges[a], edges[b], edges[c]};
        bool separated = true;
        for (auto [u, v] : triple) separated = separated && comp_of(u) != comp_of(v);
        if (!separated) continue;

        std::vector<std::vector<int>> quotient(comps.size());
        for (auto [u, v] : triple) {
          quotient[static_cast<std::size_t>(comp_of(u))].push_back(comp_of(v));
          quotient[static_cast<std::size_t>(comp_of(v))].push_back(comp_of(u));
        }
        std::vector<int> color(comps.size(), -1);
        bool bipartite = true;
        for (std::size_t start = 0; start < comps.size() && bipartite; ++start) {
          if (color[start] != -1) continue;
          color[start] = 0;  // isolated quotient nodes land on side A
          std::vector<std::size_t> stack{start};
          while (!stack.empty() && bipartite) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (int nb : quotient[cur]) {
              auto ni = static_cast<std::size_t>(nb);
              if (color[ni] == -1) {
                color[ni] = 1 - color[cur];
                stack.push_back(ni);
              } else if (color[ni] == color[cur]) {
                bipartite = false;
              }
            }
          }
        }
        if (!bipartite) continue;

        MatchingCutCertificate cert;
        cert.edges = triple;
        for (std::size_t i = 0; i < comps.size(); ++i)
          (color[i] == 0 ? cert.side_a : cert.side_b) |= comps[i];
        return cert;
      }
    }
  }
  return std::nullopt;
}

std::optional<K4MinusWitness> has_k4_minus(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    VertexSet shared = common_neighbors(g, u, v);
    if (shared.size() >= 2) {
      auto apexes = shared.to_vector();
      return K4MinusWitness{{u, v}, {apexes[0], apexes[1]}};
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> find_cut_of_size_at_most_2(const Graph& g) {
  int n = g.vertex_count();
  if (n >= 2 && !is_connected(g)) return VertexSet{};
  for (int v = 0; v < n; ++v) {
    VertexSet s = VertexSet::of({v});
    if (disconnects(g, s)) return s;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      VertexSet s = VertexSet::of({u, v});
      if (disconnects(g, s)) return s;
    }
  }
  return std::nullopt;
}

bool is_3_connected(const Graph& g) {
  if (g.vertex_count() < 4) return false;
  if (!is_connected(g)) return false;
  return !find_cut_of_size_at_most_2(g).has_value();
}

}  // namespace gsc

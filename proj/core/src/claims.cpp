#include "gsc/claims.hpp"

#include <stdexcept>

#include "gsc/cutset.hpp"

namespace gsc {

ClaimAudit audit_claims(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("audit expects a connected graph");
  int n = g.vertex_count();
  int m = g.edge_count();
  ClaimAudit audit;

  // 6: extremal edge count.
  if (m != 2 * n - 3) {
    auto& f = audit.claim(6);
    f.holds = false;
    f.note = "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", expected m=2n-3=" +
             std::to_string(2 * n - 3);
  }

  // 7: every vertex lies in a triangle.
  for (int v = 0; v < n; ++v) {
    bool in_triangle = false;
    VertexSet nb = g.neighbors(v);
    nb.for_each([&](int u) { in_triangle = in_triangle || (g.neighbors(u) & nb).bits(); });
    if (!in_triangle) {
      auto& f = audit.claim(7);
      f.holds = false;
      f.vertex_sets.push_back(VertexSet::of({v}));
      f.note = "vertex " + std::to_string(v) + " lies in no triangle";
      break;
    }
  }

  // 8: no clique cutset of size 2 or 3.
  if (auto cc = has_clique_cutset(g, {2, 3})) {
    auto& f = audit.claim(8);
    f.holds = false;
    f.vertex_sets.push_back(cc->clique);
    f.note = cc->clique.size() == 2 ? "edge cutset" : "triangle cutset";
  }

  // 9: 3-connected.
  if (!is_3_connected(g)) {
    auto& f = audit.claim(9);
    f.holds = false;
    if (n < 4) {
      f.note = "fewer than 4 vertices";
    } else if (auto cut = find_cut_of_size_at_most_2(g)) {
      f.vertex_sets.push_back(*cut);
      f.note = "cut of size " + std::to_string(cut->size());
    }
  }

  // 10: no 3-edge matching cut.
  if (auto mc = has_3edge_matching_cut(g)) {
    auto& f = audit.claim(10);
    f.holds = false;
    f.vertex_sets.push_back(mc->side_a);
    f.vertex_sets.push_back(mc->side_b);
    f.edges.assign(mc->edges.begin(), mc->edges.end());
    f.note = "matching cut";
  }

  // 11: no two triangles sharing an edge.
  if (auto k4m = has_k4_minus(g)) {
    auto& f = audit.claim(11);
    f.holds = false;
    f.vertex_sets.push_back(VertexSet::of(
        {k4m->shared_edge.first, k4m->shared_edge.second, k4m->apexes.first, k4m->apexes.second}));
    f.edges.push_back(k4m->shared_edge);
    f.note = "two triangles share edge (" + std::to_string(k4m->shared_edge.first) + "," +
             std::to_string(k4m->shared_edge.second) + ")";
  }

  // 12: non-adjacent vertices share at most two neighbors.
  for (int x = 0; x < n && audit.claim(12).holds; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      VertexSet shared = common_neighbors(g, x, y);
      if (shared.size() > 2) {
        auto& f = audit.claim(12);
        f.holds = false;
        f.vertex_sets.push_back(VertexSet::of({x, y}));
        f.vertex_sets.push_back(shared);
        f.note = "non-adjacent pair (" + std::to_string(x) + "," + std::to_string(y) + ") shares " +
                 std::to_string(shared.size()) + " neighbors";
        break;
      }
    }
  }

  // 13: no cutset inducing a 2-edge path.
  if (auto p3 = has_p3_cutset(g)) {
    auto& f = audit.claim(13);
    f.holds = false;
    f.vertex_sets.push_back(p3->certificate.cutset);
    f.edges.push_back({p3->path[0], p3->path[1]});
    f.edges.push_back({p3->path[1], p3->path[2]});
    f.note = "path cutset " + std::to_string(p3->path[0]) + "-" + std::to_string(p3->path[1]) + "-" +
             std::to_string(p3->path[2]);
  }

  // 14: every triangle has at least two vertices in other triangles.
  // Unlike the single-witness checks above, all violating triangles are
  // reported (a triangle-free neighborhood often shows up in pairs).
  auto tris = triangles(g);
  for (const auto& t : tris) {
    int anchored = 0;
    t.for_each([&](int v) {
      for (const auto& other : tris) {
        if (other != t && other.contains(v)) {
          ++anchored;
          return;
        }
      }
    });
    if (anchored < 2) {
      auto& f = audit.claim(14);
      f.holds = false;
      f.vertex_sets.push_back(t);
      f.note = "triangle with fewer than 2 vertices in other triangles";
    }
  }

  return audit;
}

}  // namespace gsc

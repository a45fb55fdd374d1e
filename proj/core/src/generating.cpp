#include "gsc/generating.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

namespace gsc {

namespace {

int fresh_count(PieceKind kind, AttachKind attach) {
  if (kind == PieceKind::K3) {
    switch (attach) {
      case AttachKind::Root: return 3;
      case AttachKind::Edge: return 1;
      case AttachKind::Triangle: return 0;
    }
  }
  switch (attach) {
    case AttachKind::Root: return 6;
    case AttachKind::Edge: return 4;
    case AttachKind::Triangle: return 3;
  }
  return 0;
}

int target_count(AttachKind attach) {
  switch (attach) {
    case AttachKind::Root: return 0;
    case AttachKind::Edge: return 2;
    case AttachKind::Triangle: return 3;
  }
  return 0;
}

bool is_stable_in(const Graph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

}  // namespace

VertexSet piece_vertices(const Piece& p) {
  VertexSet out;
  for (int i = 0; i < target_count(p.attach); ++i) out.add(p.targets[static_cast<std::size_t>(i)]);
  for (int f : p.fresh) out.add(f);
  return out;
}

std::vector<std::pair<int, int>> piece_edges(const Piece& p) {
  const auto& t = p.targets;
  const auto& f = p.fresh;
  if (p.kind == PieceKind::K3) {
    switch (p.attach) {
      case AttachKind::Root:
        return {{f[0], f[1]}, {f[1], f[2]}, {f[0], f[2]}};
      case AttachKind::Edge:
        return {{t[0], t[1]}, {f[0], t[0]}, {f[0], t[1]}};
      case AttachKind::Triangle:
        return {{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}};
    }
  }
  switch (p.attach) {
    case AttachKind::Root:
      // fresh = (u, v, w, a, b, c): triangles uvw, abc, matching au bv cw
      return {{f[0], f[1]}, {f[1], f[2]}, {f[0], f[2]},
              {f[3], f[4]}, {f[4], f[5]}, {f[3], f[5]},
              {f[0], f[3]}, {f[1], f[4]}, {f[2], f[5]}};
    case AttachKind::Edge:
      if (p.glue == PrismEdgeGlue::Matching) {
        // targets = (v, b), fresh = (u, w, a, c)
        return {{t[0], t[1]},
                {f[0], t[0]}, {f[1], t[0]}, {f[0], f[1]},
                {f[2], t[1]}, {f[3], t[1]}, {f[2], f[3]},
                {f[2], f[0]}, {f[3], f[1]}};
      }
      // targets = (u, v) inside a triangle, fresh = (w, a, b, c)
      return {{t[0], t[1]}, {f[0], t[0]}, {f[0], t[1]},
              {f[1], f[2]}, {f[2], f[3]}, {f[1], f[3]},
              {f[1], t[0]}, {f[2], t[1]}, {f[3], f[0]}};
    case AttachKind::Triangle:
      // targets = (u, v, w), fresh = (a, b, c)
      return {{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]},
              {f[0], f[1]}, {f[1], f[2]}, {f[0], f[2]},
              {f[0], t[0]}, {f[1], t[1]}, {f[2], t[2]}};
  }
  return {};
}

std::vector<SequenceIssue> validate(const GeneratingSequence& s) {
  std::vector<SequenceIssue> issues;
  if (s.pieces.empty()) {
    issues.push_back({1, false, "sequence has no pieces"});
    return issues;
  }

  bool shape_ok = true;
  auto fail = [&](int idx, std::string msg) {
    issues.push_back({idx, false, std::move(msg)});
    shape_ok = false;
  };

  VertexSet seen;
  for (int i = 0; i < s.size(); ++i) {
    const Piece& p = s.pieces[static_cast<std::size_t>(i)];
    int idx = i + 1;

    if (i == 0 && p.attach != AttachKind::Root) {
      fail(idx, "first piece must be a root");
      continue;
    }
    if (i > 0 && p.attach == AttachKind::Root) {
      fail(idx, "only the first piece may be a root");
      continue;
    }

    bool targets_ok = true;
    VertexSet tset;
    for (int j = 0; j < target_count(p.attach); ++j) {
      int t = p.targets[static_cast<std::size_t>(j)];
      if (t < 0 || t >= kMaxVertices) {
        fail(idx, "target id " + std::to_string(t) + " out of range");
        targets_ok = false;
      } else if (!seen.contains(t)) {
        fail(idx, "target " + std::to_string(t) + " was not created by an earlier piece");
        targets_ok = false;
      } else if (tset.contains(t)) {
        fail(idx, "duplicate target " + std::to_string(t));
        targets_ok = false;
      } else {
        tset.add(t);
      }
    }
    (void)targets_ok;

    int want = fresh_count(p.kind, p.attach);
    if (static_cast<int>(p.fresh.size()) != want) {
      fail(idx, "piece must introduce " + std::to_string(want) + " fresh vertices, got " +
                    std::to_string(p.fresh.size()));
    } else {
      VertexSet mine;
      for (int fv : p.fresh) {
        if (fv < 0 || fv >= kMaxVertices) {
          fail(idx, "fresh id " + std::to_string(fv) + " out of range");
        } else if (seen.contains(fv) || mine.contains(fv)) {
          fail(idx, "fresh id " + std::to_string(fv) + " already in use");
        } else {
          mine.add(fv);
        }
      }
      seen |= mine;
    }

    if (p.kind == PieceKind::K3 && p.attach == AttachKind::Triangle)
      issues.push_back({idx, true, "K3 glued onto a triangle adds no vertices or edges"});
  }

  if (shape_ok && seen != VertexSet::full(seen.size()))
    fail(s.size(), "vertex ids do not form a dense range starting at 0");

  if (!shape_ok) return issues;

  // Shapes and labels are fine; now check each attachment against the
  // graph built so far. Stop at the first miss, later pieces would only
  // produce noise against a graph that was never built.
  Graph partial(seen.size());
  for (int i = 0; i < s.size(); ++i) {
    const Piece& p = s.pieces[static_cast<std::size_t>(i)];
    const auto& t = p.targets;
    if (p.attach == AttachKind::Edge && !partial.has_edge(t[0], t[1])) {
      fail(i + 1, "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                      ") is not an edge of the graph built so far");
      break;
    }
    if (p.attach == AttachKind::Triangle &&
        !(partial.has_edge(t[0], t[1]) && partial.has_edge(t[1], t[2]) && partial.has_edge(t[0], t[2]))) {
      fail(i + 1, "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
                      ") is not a triangle of the graph built so far");
      break;
    }
    for (auto [u, v] : piece_edges(p)) partial.add_edge(u, v);
  }
  return issues;
}

bool is_valid(const GeneratingSequence& s) {
  for (const auto& issue : validate(s))
    if (!issue.warning) return false;
  return true;
}

Graph build(const GeneratingSequence& s) {
  for (const auto& issue : validate(s))
    if (!issue.warning) throw SequenceError(issue.piece_index, issue.message);

  VertexSet ids;
  for (const auto& p : s.pieces)
    for (int f : p.fresh) ids.add(f);
  Graph g(ids.size());
  for (const auto& p : s.pieces)
    for (auto [u, v] : piece_edges(p)) g.add_edge(u, v);
  return g;
}

Graph build_prefix(const GeneratingSequence& s, int k) {
  if (k < 1 || k > s.size()) throw std::invalid_argument("prefix length out of range");
  GeneratingSequence prefix;
  prefix.pieces.assign(s.pieces.begin(), s.pieces.begin() + k);
  return build(prefix);
}

namespace detail {

namespace {

// View of one piece as a concrete labeled graph, small enough that linear
// scans beat any indexing.
struct PieceView {
  std::vector<int> verts;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int a, int b) const {
    for (auto [u, v] : edges)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  }
};

PieceView view_of(const Piece& p) {
  return {piece_vertices(p).to_vector(), piece_edges(p)};
}

struct PrismRoles {
  // triangles (u, v, w) and (a, b, c), matching edges au, bv, cw
  int u, v, w, a, b, c;
};

std::array<std::array<int, 3>, 2> prism_triangles(const PieceView& pv) {
  std::array<std::array<int, 3>, 2> tris{};
  std::size_t found = 0;
  const auto& vs = pv.verts;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (pv.adjacent(vs[i], vs[j]) && pv.adjacent(vs[j], vs[k]) && pv.adjacent(vs[i], vs[k])) {
          assert(found < 2);
          tris[found++] = {vs[i], vs[j], vs[k]};
        }
  assert(found == 2);
  return tris;
}

int matching_partner(const PieceView& pv, const std::array<std::array<int, 3>, 2>& tris, int x) {
  bool in_first = std::find(tris[0].begin(), tris[0].end(), x) != tris[0].end();
  for (int y : tris[in_first ? 1 : 0])
    if (pv.adjacent(x, y)) return y;
  assert(false && "prism vertex without matching partner");
  return -1;
}

// Role assignment with u pinned to `anchor`; the rest follows from the
// structure (v, w ascending within the anchor's triangle).
PrismRoles roles_from_anchor(const PieceView& pv, const std::array<std::array<int, 3>, 2>& tris, int anchor) {
  bool in_first = std::find(tris[0].begin(), tris[0].end(), anchor) != tris[0].end();
  const auto& tri = tris[in_first ? 0 : 1];
  PrismRoles r{};
  r.u = anchor;
  std::vector<int> rest;
  for (int x : tri)
    if (x != anchor) rest.push_back(x);
  std::sort(rest.begin(), rest.end());
  r.v = rest[0];
  r.w = rest[1];
  r.a = matching_partner(pv, tris, r.u);
  r.b = matching_partner(pv, tris, r.v);
  r.c = matching_partner(pv, tris, r.w);
  return r;
}

}  // namespace

Piece root_form(const Piece& p) {
  if (p.attach == AttachKind::Root) return p;
  PieceView pv = view_of(p);
  Piece out;
  out.kind = p.kind;
  out.attach = AttachKind::Root;
  if (p.kind == PieceKind::K3) {
    out.fresh = pv.verts;  // already ascending
    return out;
  }
  auto tris = prism_triangles(pv);
  PrismRoles r = roles_from_anchor(pv, tris, pv.verts.front());
  out.fresh = {r.u, r.v, r.w, r.a, r.b, r.c};
  return out;
}

Piece attach_form(const Piece& p, VertexSet targets) {
  PieceView pv = view_of(p);
  auto tv = targets.to_vector();
  assert(targets.subset_of(piece_vertices(p)));

  Piece out;
  out.kind = p.kind;
  if (p.kind == PieceKind::K3) {
    if (tv.size() == 3) {
      out.attach = AttachKind::Triangle;
      out.targets = {tv[0], tv[1], tv[2]};
      return out;  // the no-op form
    }
    out.attach = AttachKind::Edge;
    out.targets = {tv[0], tv[1], -1};
    for (int x : pv.verts)
      if (!targets.contains(x)) out.fresh = {x};
    return out;
  }

  auto tris = prism_triangles(pv);
  if (tv.size() == 3) {
    out.attach = AttachKind::Triangle;
    out.targets = {tv[0], tv[1], tv[2]};
    out.fresh = {matching_partner(pv, tris, tv[0]), matching_partner(pv, tris, tv[1]),
                 matching_partner(pv, tris, tv[2])};
    return out;
  }

  out.attach = AttachKind::Edge;
  int x = tv[0], y = tv[1];
  if (matching_partner(pv, tris, x) == y) {
    // Glued along a matching edge: x plays v, y plays b.
    out.glue = PrismEdgeGlue::Matching;
    out.targets = {x, y, -1};
    PrismRoles r = roles_from_anchor(pv, tris, x);  // r.u == x; mates are r.v, r.w
    out.fresh = {r.v, r.w, matching_partner(pv, tris, r.v), matching_partner(pv, tris, r.w)};
  } else {
    // Glued along a triangle edge: x plays u, y plays v.
    out.glue = PrismEdgeGlue::Triangle;
    out.targets = {x, y, -1};
    bool in_first = std::find(tris[0].begin(), tris[0].end(), x) != tris[0].end();
    const auto& tri = tris[in_first ? 0 : 1];
    int w = -1;
    for (int z : tri)
      if (z != x && z != y) w = z;
    assert(w != -1 && "edge targets must share a piece triangle");
    out.fresh = {w, matching_partner(pv, tris, x), matching_partner(pv, tris, y),
                 matching_partner(pv, tris, w)};
  }
  return out;
}

Piece prism_root_piece(const Graph& g) {
  PieceView pv;
  pv.verts = g.vertices().to_vector();
  pv.edges = g.edges();
  auto tris = prism_triangles(pv);
  PrismRoles r = roles_from_anchor(pv, tris, pv.verts.front());
  Piece out;
  out.kind = PieceKind::Prism;
  out.attach = AttachKind::Root;
  out.fresh = {r.u, r.v, r.w, r.a, r.b, r.c};
  return out;
}

GeneratingSequence relabel_sequence(const GeneratingSequence& s, std::span<const int> old_to_new) {
  GeneratingSequence out = s;
  for (auto& p : out.pieces) {
    for (int j = 0; j < target_count(p.attach); ++j) {
      auto& t = p.targets[static_cast<std::size_t>(j)];
      t = old_to_new[static_cast<std::size_t>(t)];
    }
    for (int& f : p.fresh) f = old_to_new[static_cast<std::size_t>(f)];
  }
  return out;
}

}  // namespace detail

namespace {

// The anchor for re-rooting at the last piece: the earliest earlier piece
// containing the last piece's attachment clique together with its edges.
// Shared edges and triangles of a built graph always live inside a single
// piece, so this always exists for a valid sequence.
int anchor_piece(const GeneratingSequence& s, const Piece& last) {
  VertexSet tset;
  for (int j = 0; j < target_count(last.attach); ++j) tset.add(last.targets[static_cast<std::size_t>(j)]);
  auto tv = tset.to_vector();
  for (int i = 0; i < s.size(); ++i) {
    const Piece& p = s.pieces[static_cast<std::size_t>(i)];
    if (!tset.subset_of(piece_vertices(p))) continue;
    detail::PieceView pv{piece_vertices(p).to_vector(), piece_edges(p)};
    bool all_edges = true;
    for (std::size_t a = 0; a < tv.size(); ++a)
      for (std::size_t b = a + 1; b < tv.size(); ++b)
        all_edges = all_edges && pv.adjacent(tv[a], tv[b]);
    if (all_edges) return i + 1;
  }
  return -1;
}

GeneratingSequence reroot_impl(GeneratingSequence s, int t) {
  if (t == 1) return s;
  int k = s.size();
  Piece last = std::move(s.pieces.back());
  s.pieces.pop_back();

  if (t < k) {
    GeneratingSequence out = reroot_impl(std::move(s), t);
    out.pieces.push_back(std::move(last));
    return out;
  }

  // Re-rooting at the final piece: it becomes the root, and the rest of
  // the sequence is re-rooted to start at a piece that contains the old
  // attachment clique, which then glues back onto the new root there.
  VertexSet tset;
  for (int j = 0; j < target_count(last.attach); ++j) tset.add(last.targets[static_cast<std::size_t>(j)]);
  int anchor = anchor_piece(s, last);
  assert(anchor >= 1);

  GeneratingSequence pre = reroot_impl(std::move(s), anchor);
  GeneratingSequence out;
  out.pieces.reserve(static_cast<std::size_t>(k));
  out.pieces.push_back(detail::root_form(last));
  out.pieces.push_back(detail::attach_form(pre.pieces.front(), tset));
  out.pieces.insert(out.pieces.end(), pre.pieces.begin() + 1, pre.pieces.end());
  return out;
}

}  // namespace

GeneratingSequence reroot(const GeneratingSequence& s, int piece_index) {
  if (piece_index < 1 || piece_index > s.size())
    throw std::invalid_argument("piece index out of range");
  for (const auto& issue : validate(s))
    if (!issue.warning) throw SequenceError(issue.piece_index, issue.message);
  return reroot_impl(s, piece_index);
}

GeneratingSequence normalize_sequence(const GeneratingSequence& s) {
  for (const auto& issue : validate(s))
    if (!issue.warning) throw SequenceError(issue.piece_index, issue.message);

  GeneratingSequence out;
  for (const auto& p : s.pieces) {
    if (p.kind == PieceKind::Prism && p.attach == AttachKind::Edge && p.glue == PrismEdgeGlue::Triangle) {
      // The glued edge sits inside a piece triangle whose third vertex is
      // fresh; introduce that triangle first, then glue the prism onto all
      // of it. Same vertices, same edges, one piece longer.
      int x = p.targets[0], y = p.targets[1];
      int w = p.fresh[0];
      Piece tri;
      tri.kind = PieceKind::K3;
      tri.attach = AttachKind::Edge;
      tri.targets = {x, y, -1};
      tri.fresh = {w};
      Piece prism;
      prism.kind = PieceKind::Prism;
      prism.attach = AttachKind::Triangle;
      prism.targets = {x, y, w};
      prism.fresh = {p.fresh[1], p.fresh[2], p.fresh[3]};
      out.pieces.push_back(std::move(tri));
      out.pieces.push_back(std::move(prism));
    } else {
      out.pieces.push_back(p);
    }
  }
  return out;
}

GeneratingSequence random_gsc(int piece_count, std::uint64_t seed) {
  if (piece_count < 1) throw std::invalid_argument("piece count must be >= 1");
  std::mt19937_64 rng(seed);
  // Engine output is used directly (not through a distribution) so the
  // same seed yields the same sequence on every platform.
  auto pick = [&](std::size_t size) { return static_cast<std::size_t>(rng() % size); };

  GeneratingSequence s;
  int n = 0;
  {
    Piece root;
    root.attach = AttachKind::Root;
    if (pick(2) == 0) {
      root.kind = PieceKind::K3;
      root.fresh = {0, 1, 2};
      n = 3;
    } else {
      root.kind = PieceKind::Prism;
      root.fresh = {0, 1, 2, 3, 4, 5};
      n = 6;
    }
    s.pieces.push_back(std::move(root));
  }

  Graph partial = build(s);
  for (int i = 1; i < piece_count; ++i) {
    int capacity = kMaxVertices - n;
    bool k3_grows = capacity >= 1;
    bool prism_fits = capacity >= 3;

    PieceKind kind;
    if (prism_fits)
      kind = pick(2) == 0 ? PieceKind::K3 : PieceKind::Prism;
    else
      kind = PieceKind::K3;

    auto edges = partial.edges();
    Piece p;
    p.kind = kind;
    if (kind == PieceKind::K3) {
      if (k3_grows) {
        auto [a, b] = edges[pick(edges.size())];
        p.attach = AttachKind::Edge;
        p.targets = {a, b, -1};
        p.fresh = {n};
        n += 1;
      } else {
        // Out of room: the no-op triangle gluing is the only legal K3 move.
        auto tris = triangles(partial);
        auto t = tris[pick(tris.size())].to_vector();
        p.attach = AttachKind::Triangle;
        p.targets = {t[0], t[1], t[2]};
      }
    } else {
      int mode = capacity >= 4 ? static_cast<int>(pick(3)) : 2;
      if (mode == 2) {
        auto tris = triangles(partial);
        auto t = tris[pick(tris.size())].to_vector();
        p.attach = AttachKind::Triangle;
        p.targets = {t[0], t[1], t[2]};
        p.fresh = {n, n + 1, n + 2};
        n += 3;
      } else {
        auto [a, b] = edges[pick(edges.size())];
        p.attach = AttachKind::Edge;
        p.glue = mode == 0 ? PrismEdgeGlue::Matching : PrismEdgeGlue::Triangle;
        p.targets = {a, b, -1};
        p.fresh = {n, n + 1, n + 2, n + 3};
        n += 4;
      }
    }
    s.pieces.push_back(std::move(p));
    partial = build(s);
  }
  return s;
}

VertexSet extend_stable_set(const GeneratingSequence& s, int prefix_len, VertexSet x, int v) {
  for (const auto& issue : validate(s))
    if (!issue.warning) throw SequenceError(issue.piece_index, issue.message);
  if (prefix_len < 1 || prefix_len > s.size())
    throw SequenceError(prefix_len, "prefix length out of range");

  for (int i = 0; i < s.size(); ++i) {
    const Piece& p = s.pieces[static_cast<std::size_t>(i)];
    if (p.kind == PieceKind::Prism && p.attach == AttachKind::Edge && p.glue == PrismEdgeGlue::Triangle)
      throw SequenceError(i + 1, "prism glued along a triangle edge; normalize the sequence first");
    if (!piece_vertices(p).contains(v))
      throw SequenceError(i + 1, "vertex " + std::to_string(v) + " must belong to every piece");
  }

  Graph prefix = build_prefix(s, prefix_len);
  if (x.contains(v)) throw SequenceError(prefix_len, "seed set must not contain the shared vertex");
  if (!x.subset_of(prefix.vertices()))
    throw SequenceError(prefix_len, "seed set has vertices outside the prefix build");
  if (!is_stable_in(prefix, x))
    throw SequenceError(prefix_len, "seed set is not stable in the prefix build");

  for (int i = prefix_len; i < s.size(); ++i) {
    const Piece& p = s.pieces[static_cast<std::size_t>(i)];
    auto pe = piece_edges(p);
    auto piece_adjacent = [&](int a, int b) {
      for (auto [pu, pv] : pe)
        if ((pu == a && pv == b) || (pu == b && pv == a)) return true;
      return false;
    };

    if (p.kind == PieceKind::K3) {
      if (p.attach == AttachKind::Triangle) continue;  // no-op piece
      int b = p.targets[0] == v ? p.targets[1] : p.targets[0];
      if (!x.contains(b)) x.add(p.fresh[0]);
      continue;
    }

    if (p.attach == AttachKind::Edge) {
      // Prism across a matching edge (v, b). The fresh triangle around v
      // contributes one vertex; if b is free, so does the fresh triangle
      // around b, picking the mate that stays non-adjacent.
      int b = p.targets[0] == v ? p.targets[1] : p.targets[0];
      std::vector<int> v_mates, b_mates;
      for (int f : p.fresh) {
        if (piece_adjacent(v, f)) v_mates.push_back(f);
        if (piece_adjacent(b, f)) b_mates.push_back(f);
      }
      int w = *std::min_element(v_mates.begin(), v_mates.end());
      x.add(w);
      if (!x.contains(b)) {
        for (int cand : b_mates)
          if (!piece_adjacent(cand, w)) x.add(cand);
      }
      continue;
    }

    // Prism onto a triangle containing v: take v's fresh matching partner,
    // which is adjacent to nothing in the old graph but v.
    for (int f : p.fresh)
      if (piece_adjacent(v, f)) x.add(f);
  }

  Graph whole = build(s);
  assert(is_stable_in(whole, x) && !x.contains(v));
  (void)whole;
  return x;
}

}  // namespace gsc

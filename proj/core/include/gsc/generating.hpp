#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

/// The two building blocks: the triangle and the prism (two disjoint
/// triangles joined by a perfect matching, i.e. the complement of C6).
enum class PieceKind { K3, Prism };

enum class AttachKind {
  Root,      // first piece, all vertices fresh
  Edge,      // glued onto an existing edge (shares exactly 2 vertices)
  Triangle,  // glued onto an existing triangle (shares exactly 3 vertices)
};

/// A prism has two orbits of edges: the three matching edges between its
/// triangles, and the six triangle edges. An edge attachment must say which
/// orbit the shared edge lands on; the built graphs differ.
enum class PrismEdgeGlue { Matching, Triangle };

/// One step of a generating sequence. `targets` names the existing vertices
/// the piece is glued onto (2 for Edge, 3 for Triangle, none for Root) and
/// `fresh` lists the new vertex ids the piece introduces.
///
/// Fresh ids are listed in a fixed per-shape role order. Writing a prism as
/// triangles uvw and abc with matching edges au, bv, cw:
///   Root prism            fresh = (u, v, w, a, b, c)
///   Prism on edge (v, b)  [matching glue]  fresh = (u, w, a, c)
///   Prism on edge (u, v)  [triangle glue]  fresh = (w, a, b, c)
///   Prism on triangle (u, v, w)            fresh = (a, b, c)
/// A K3 root lists its 3 vertices, a K3 on an edge its 1 new vertex, and a
/// K3 on a triangle is a legal no-op with no fresh vertices.
struct Piece {
  PieceKind kind = PieceKind::K3;
  AttachKind attach = AttachKind::Root;
  std::array<int, 3> targets{-1, -1, -1};  // unused slots stay -1
  PrismEdgeGlue glue = PrismEdgeGlue::Matching;  // only read for Prism+Edge
  std::vector<int> fresh;

  bool operator==(const Piece&) const = default;
};

/// Ordered pieces; the built graph is their edge-set union. Every valid
/// sequence builds a connected graph with edge count exactly 2n-3.
struct GeneratingSequence {
  std::vector<Piece> pieces;

  int size() const { return static_cast<int>(pieces.size()); }
  bool operator==(const GeneratingSequence&) const = default;
};

/// Validation finding. `piece_index` is 1-based (piece 1 is the root);
/// warnings (currently: the no-op K3-on-triangle) do not block building.
struct SequenceIssue {
  int piece_index = 0;
  bool warning = false;
  std::string message;
};

class SequenceError : public std::runtime_error {
 public:
  SequenceError(int piece_index, const std::string& message)
      : std::runtime_error("piece " + std::to_string(piece_index) + ": " + message),
        piece_index_(piece_index) {}

  int piece_index() const { return piece_index_; }

 private:
  int piece_index_;
};

/// All problems found, errors and warnings, in piece order.
std::vector<SequenceIssue> validate(const GeneratingSequence& s);

/// True iff validate() reports no error-level issues.
bool is_valid(const GeneratingSequence& s);

/// Build the graph. Throws SequenceError at the first invalid piece.
Graph build(const GeneratingSequence& s);

/// Build of the first k pieces only (1 <= k <= size). Prefixes of valid
/// sequences are themselves valid.
Graph build_prefix(const GeneratingSequence& s, int k);

/// The piece's vertices (targets plus fresh).
VertexSet piece_vertices(const Piece& p);

/// The piece's full edge list, including the edges of the glued clique.
std::vector<std::pair<int, int>> piece_edges(const Piece& p);

/// Rewrite s so the (1-based) i-th piece comes first, with the same vertex
/// labels, preserving length, validity, and the built labeled graph. Any
/// piece of a sequence can serve as the starting point; this realizes that
/// by splitting off the last piece and recursing (see the .cpp).
GeneratingSequence reroot(const GeneratingSequence& s, int piece_index);

/// Rewrite every prism glued along one of its triangle edges into a K3
/// identification followed by a triangle identification with the prism.
/// After this, each edge-attached prism meets the old graph in one of its
/// matching edges. The built graph is unchanged; length can only grow.
GeneratingSequence normalize_sequence(const GeneratingSequence& s);

/// Deterministic pseudo-random valid sequence with `piece_count` pieces:
/// kinds and attachment sites drawn uniformly over the legal choices, fresh
/// vertices numbered consecutively. Same seed, same sequence.
GeneratingSequence random_gsc(int piece_count, std::uint64_t seed);

/// Grow a stable set along a sequence. Given a normalized valid s, a vertex
/// v that belongs to every piece, and a stable set x of build_prefix(s, k)
/// with v not in x, returns a stable set of build(s) containing x and still
/// excluding v. Each piece beyond the prefix contributes:
///   K3 on edge (v, b):      nothing if b in x, else the new vertex
///   prism on edge (v, b):   a fresh triangle-mate w of v, plus (when b is
///                           not in x) the fresh mate of b not adjacent to w
///   prism on triangle:      the fresh matching partner of v
/// Violated preconditions raise SequenceError naming the offending piece.
VertexSet extend_stable_set(const GeneratingSequence& s, int prefix_len, VertexSet x, int v);

namespace detail {

/// The piece re-expressed as a root (all its vertices fresh, role order).
Piece root_form(const Piece& p);

/// The piece re-expressed as glued onto `targets` (2 or 3 of its own
/// vertices forming an edge/triangle of the piece). Rebuilding the result
/// yields exactly the original piece's labeled edges.
Piece attach_form(const Piece& p, VertexSet targets);

/// Root piece for a graph already known to be a prism, role-ordered
/// deterministically from the labels.
Piece prism_root_piece(const Graph& g);

/// Apply an id map to every target and fresh label.
GeneratingSequence relabel_sequence(const GeneratingSequence& s, std::span<const int> old_to_new);

}  // namespace detail

}  // namespace gsc

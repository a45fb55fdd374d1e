#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gsc/graph.hpp"

namespace gsc {

/// Outcome of one structural audit check. When the check fails, the
/// offending structure is reported: vertex sets (a missing-triangle vertex,
/// a cutset, a high-common-neighborhood pair, violating triangles, ...)
/// and/or edges (a matching cut), plus a short human-readable note.
struct ClaimFinding {
  bool holds = true;
  std::vector<VertexSet> vertex_sets;
  std::vector<std::pair<int, int>> edges;
  std::string note;
};

/// The nine structural properties every minimal counterexample to the
/// extremal characterization would have to satisfy, numbered 6 through 14
/// in reports:
///   6  edge count is exactly 2n-3
///   7  every vertex lies in a triangle
///   8  no clique cutset of size 2 or 3
///   9  3-connected
///   10 no 3-edge matching cut
///   11 no K4-minus-an-edge subgraph
///   12 non-adjacent pairs share at most 2 neighbors
///   13 no cutset inducing a 2-edge path
///   14 every triangle has >= 2 vertices that lie in other triangles
struct ClaimAudit {
  static constexpr int kFirstClaim = 6;
  static constexpr int kLastClaim = 14;

  std::array<ClaimFinding, kLastClaim - kFirstClaim + 1> findings;

  ClaimFinding& claim(int number) { return findings[number - kFirstClaim]; }
  const ClaimFinding& claim(int number) const { return findings[number - kFirstClaim]; }

  bool all_hold() const {
    for (const auto& f : findings)
      if (!f.holds) return false;
    return true;
  }
};

/// Evaluate all nine checks independently. Precondition: g connected.
ClaimAudit audit_claims(const Graph& g);

}  // namespace gsc

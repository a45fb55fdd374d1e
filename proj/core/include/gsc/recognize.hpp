#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsc/generating.hpp"
#include "gsc/graph.hpp"

namespace gsc {

/// One step of a non-membership explanation: a subgraph (as graph6) and
/// the reason it cannot be generated.
struct TraceEntry {
  std::string graph6;
  std::string reason;
};

/// Outcome of recognition. Members carry a generating sequence that
/// rebuilds the input exactly (same labels); non-members carry the failing
/// decomposition chain.
struct RecognitionResult {
  bool member = false;
  std::optional<GeneratingSequence> certificate;
  std::vector<TraceEntry> trace;
};

/// n == 3 with all three edges.
bool is_triangle(const Graph& g);

/// n == 6, 3-regular, exactly two triangles. (The only other cubic graph
/// on six vertices is K3,3, which has none.)
bool is_prism(const Graph& g);

/// Decide membership by clique-cutset decomposition: a non-base member
/// always has an edge or triangle cutset, and for a member every part of
/// any such split is again a member, so the first cutset found decides the
/// question without backtracking. Verdicts are memoized under a
/// degree-sorted relabeling; equal keys mean equal relabeled graphs, so a
/// hit is always sound and a near-miss only costs recomputation.
/// Throws std::invalid_argument unless g is connected with n >= 3.
RecognitionResult recognize(const Graph& g);

/// Membership through the extremal characterization instead of
/// decomposition: in the regime m <= 2n-3, membership is equivalent to
/// having exactly 2n-3 edges and no stable cutset. Intended as an
/// independent oracle for cross-checking recognize. Precondition: g
/// connected; throws std::invalid_argument when m > 2n-3.
bool recognize_via_theorem(const Graph& g);

}  // namespace gsc

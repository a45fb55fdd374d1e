#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <utility>

#include "gsc/graph.hpp"

namespace gsc {

/// Witness that removing `cutset` disconnects the graph: side_a and side_b
/// are nonempty unions of components of G - cutset with no edge between
/// them, and the three sets partition V.
struct CutCertificate {
  VertexSet cutset;
  VertexSet side_a;
  VertexSet side_b;

  bool operator==(const CutCertificate&) const = default;
};

/// Same shape, with the extra promise that the cutset is a stable set.
using StableCutsetCertificate = CutCertificate;

/// Re-checks a certificate against the definition (partition, no crossing
/// edges, stability of the cutset). Used by the verifier and by tests.
bool is_valid_stable_cutset(const Graph& g, const CutCertificate& cert);

/// First stable cutset in the search order, or nullopt if none exists.
/// A disconnected graph yields the empty cutset with two component groups.
/// For small n this enumerates stable subsets; for larger n it branches on
/// shortest paths between candidate separated pairs (see the .cpp).
std::optional<StableCutsetCertificate> find_stable_cutset(const Graph& g);

/// Like find_stable_cutset but the returned cutset never contains x.
std::optional<StableCutsetCertificate> find_stable_cutset_avoiding(const Graph& g, int x);

namespace detail {
// The two search strategies, exposed for cross-checking in tests.
// `forbidden` vertices may not enter the cutset.
std::optional<StableCutsetCertificate> stable_cutset_by_enumeration(const Graph& g, VertexSet forbidden);
std::optional<StableCutsetCertificate> stable_cutset_by_branching(const Graph& g, VertexSet forbidden);
}  // namespace detail

/// A clique (edge or triangle) whose removal disconnects the graph.
struct CliqueCutset {
  VertexSet clique;
  CutCertificate certificate;
};

/// First clique cutset whose size is one of `sizes` (subset of {2,3}),
/// candidates in lexicographic order of sorted vertex ids.
/// Precondition: g connected.
std::optional<CliqueCutset> has_clique_cutset(const Graph& g, std::initializer_list<int> sizes);

/// Three vertices inducing a 2-edge path whose removal disconnects the
/// graph. `path` is (end, middle, end) with the ends ascending.
struct P3Cutset {
  std::array<int, 3> path;
  CutCertificate certificate;
};

/// Precondition: g connected.
std::optional<P3Cutset> has_p3_cutset(const Graph& g);

/// Bipartition (A, B) of V whose crossing edges are exactly the three
/// listed edges and form a matching.
struct MatchingCutCertificate {
  VertexSet side_a;
  VertexSet side_b;
  std::array<std::pair<int, int>, 3> edges;
};

bool is_valid_matching_cut(const Graph& g, const MatchingCutCertificate& cert);

/// First 3-edge matching cut (edge triples in lexicographic order).
/// Precondition: g connected.
std::optional<MatchingCutCertificate> has_3edge_matching_cut(const Graph& g);

/// Two triangles sharing an edge, as a (not necessarily induced) subgraph.
struct K4MinusWitness {
  std::pair<int, int> shared_edge;
  std::pair<int, int> apexes;
};

std::optional<K4MinusWitness> has_k4_minus(const Graph& g);

/// First vertex set of size <= 2 whose removal disconnects g, scanning
/// singletons then pairs in lexicographic order. Requires n >= 2.
std::optional<VertexSet> find_cut_of_size_at_most_2(const Graph& g);

/// n >= 4, connected, and no vertex set of size <= 2 disconnects it.
bool is_3_connected(const Graph& g);

}  // namespace gsc

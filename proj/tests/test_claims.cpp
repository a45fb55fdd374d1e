#include <doctest.h>

#include <stdexcept>

#include "gsc/claims.hpp"
#include "support/smallgraphs.hpp"

using namespace gsc;
namespace sg = smallgraphs;

TEST_CASE("k3 audit") {
  ClaimAudit a = audit_claims(sg::k3());
  CHECK(a.claim(6).holds);   // 3 == 2*3-3
  CHECK(a.claim(7).holds);
  CHECK(a.claim(8).holds);
  CHECK(!a.claim(9).holds);  // too small to be 3-connected
  CHECK(a.claim(11).holds);
  // Its only triangle has no vertex in another triangle.
  CHECK(!a.claim(14).holds);
  REQUIRE(a.claim(14).vertex_sets.size() == 1);
  CHECK(a.claim(14).vertex_sets[0] == VertexSet::of({0, 1, 2}));
  CHECK(!a.all_hold());
}

TEST_CASE("prism audit") {
  ClaimAudit a = audit_claims(sg::prism());
  CHECK(a.claim(6).holds);  // 9 == 2*6-3
  CHECK(a.claim(7).holds);
  CHECK(a.claim(8).holds);
  CHECK(a.claim(9).holds);
  CHECK(a.claim(11).holds);
  CHECK(a.claim(12).holds);
  CHECK(a.claim(13).holds);

  // The matching between the triangles is a 3-edge matching cut.
  CHECK(!a.claim(10).holds);
  CHECK(a.claim(10).edges == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});

  // Both triangles violate the two-vertices-in-other-triangles rule.
  CHECK(!a.claim(14).holds);
  REQUIRE(a.claim(14).vertex_sets.size() == 2);
  CHECK(a.claim(14).vertex_sets[0] == VertexSet::of({0, 1, 2}));
  CHECK(a.claim(14).vertex_sets[1] == VertexSet::of({3, 4, 5}));
}

TEST_CASE("k23 audit flags the degree-3 pair") {
  ClaimAudit a = audit_claims(sg::k23());
  CHECK(!a.claim(6).holds);  // m=6, 2n-3=7
  CHECK(!a.claim(7).holds);  // bipartite: no triangles at all
  CHECK(!a.claim(12).holds);
  REQUIRE(a.claim(12).vertex_sets.size() == 2);
  CHECK(a.claim(12).vertex_sets[0] == VertexSet::of({0, 1}));
  CHECK(a.claim(12).vertex_sets[1] == VertexSet::of({2, 3, 4}));  // 3 common neighbors
}

TEST_CASE("k4 minus audit") {
  ClaimAudit a = audit_claims(sg::k4_minus());
  CHECK(a.claim(6).holds);    // 5 == 2*4-3
  CHECK(!a.claim(8).holds);   // the shared edge is a clique cutset
  CHECK(!a.claim(9).holds);
  CHECK(!a.claim(11).holds);  // it is its own forbidden subgraph
  CHECK(a.claim(11).vertex_sets[0] == VertexSet::of({0, 1, 2, 3}));
  CHECK(a.claim(12).holds);   // the one nonadjacent pair shares exactly 2
  CHECK(a.claim(14).holds);   // both triangles share the edge {0,1}
}

TEST_CASE("audit requires connected input") {
  CHECK_THROWS_AS(audit_claims(sg::two_k2()), std::invalid_argument);
}

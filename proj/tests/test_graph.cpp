#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "gsc/graph.hpp"
#include "support/smallgraphs.hpp"

using namespace gsc;
namespace sg = smallgraphs;

TEST_CASE("vertex set basics") {
  VertexSet s = VertexSet::of({1, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK(!s.contains(2));
  CHECK(s.min() == 1);
  CHECK(s.to_vector() == std::vector<int>{1, 3, 5});

  s.add(0);
  CHECK(s.min() == 0);
  s.remove(0);

  VertexSet t = VertexSet::of({3, 4});
  CHECK(s.intersects(t));
  CHECK((s & t) == VertexSet::of({3}));
  CHECK((s | t) == VertexSet::of({1, 3, 4, 5}));
  CHECK((s - t) == VertexSet::of({1, 5}));
  CHECK(VertexSet::of({1, 3}).subset_of(s));
  CHECK(!s.subset_of(t));

  CHECK(VertexSet::full(3) == VertexSet::of({0, 1, 2}));
  CHECK(VertexSet{}.empty());
  CHECK(VertexSet{}.min() == -1);

  int sum = 0;
  s.for_each([&](int v) { sum += v; });
  CHECK(sum == 1 + 3 + 5);
}

TEST_CASE("graph construction and accessors") {
  Graph g = sg::p4();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == VertexSet::of({0, 2}));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g == Graph::from_edges(4, {{2, 3}, {0, 1}, {1, 2}}));
  CHECK(g != sg::c4());

  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(63), std::invalid_argument);
}

TEST_CASE("components") {
  CHECK(components(sg::k3()).size() == 1);

  auto comps = components(sg::two_k2());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of({0, 1}));
  CHECK(comps[1] == VertexSet::of({2, 3}));

  // Prism minus its matching: the two triangles.
  Graph triangles_only = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto two = components(triangles_only);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == VertexSet::of({0, 1, 2}));
  CHECK(two[1] == VertexSet::of({3, 4, 5}));

  CHECK(components(Graph(0)).empty());

  auto within = components_within(sg::c6(), VertexSet::of({1, 2, 4, 5}));
  REQUIRE(within.size() == 2);
  CHECK(within[0] == VertexSet::of({1, 2}));
  CHECK(within[1] == VertexSet::of({4, 5}));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(sg::c5()));
  CHECK(!is_connected(sg::two_k2()));
  CHECK(is_connected(Graph(1)));
  CHECK(!is_connected(Graph(0)));
  CHECK(!is_connected(Graph(2)));
}

TEST_CASE("common neighbors") {
  CHECK(common_neighbors(sg::c4(), 0, 2) == VertexSet::of({1, 3}));
  CHECK(common_neighbors(sg::k23(), 0, 1) == VertexSet::of({2, 3, 4}));
  // Prism: endpoints of a matching edge share no neighbor.
  CHECK(common_neighbors(sg::prism(), 0, 3).empty());
}

TEST_CASE("triangle listing") {
  auto prism_tris = triangles(sg::prism());
  REQUIRE(prism_tris.size() == 2);
  CHECK(prism_tris[0] == VertexSet::of({0, 1, 2}));
  CHECK(prism_tris[1] == VertexSet::of({3, 4, 5}));

  CHECK(triangles(sg::c5()).empty());

  auto k4_tris = triangles(sg::k4());
  REQUIRE(k4_tris.size() == 4);
  CHECK(k4_tris[0] == VertexSet::of({0, 1, 2}));
  CHECK(k4_tris[3] == VertexSet::of({1, 2, 3}));
}

TEST_CASE("identify two vertices") {
  // C4 with opposite vertices identified becomes a 2-edge path.
  auto r = identify_vertices(sg::c4(), 0, 2);
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(r.graph == Graph::from_edges(3, {{0, 1}, {0, 2}}));
  CHECK(r.old_to_new == std::vector<int>{0, 1, 0, 2});

  // Edge count drops by exactly the number of common neighbors.
  CHECK(sg::c4().edge_count() - r.graph.edge_count() ==
        common_neighbors(sg::c4(), 0, 2).size());

  auto r2 = identify_vertices(sg::two_k2(), 0, 2);
  CHECK(r2.graph == Graph::from_edges(3, {{0, 1}, {0, 2}}));

  CHECK_THROWS_AS(identify_vertices(sg::c4(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(identify_vertices(sg::c4(), 2, 2), std::invalid_argument);
}

TEST_CASE("identify a set") {
  auto single = identify_set(sg::p4(), VertexSet::of({2}));
  CHECK(single.graph == sg::p4());

  auto r = identify_set(sg::p4(), VertexSet::of({1, 2}));
  CHECK(r.graph == Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(r.old_to_new == std::vector<int>{0, 1, 1, 2});

  CHECK_THROWS_AS(identify_set(sg::p4(), VertexSet{}), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  std::vector<int> map;
  Graph sub = induced_subgraph(sg::c5(), VertexSet::of({0, 1, 3}), &map);
  CHECK(sub == Graph::from_edges(3, {{0, 1}}));
  CHECK(map == std::vector<int>{0, 1, -1, 2, -1});

  CHECK(induced_subgraph(sg::k4(), VertexSet::of({1, 2, 3})) == sg::k3());
  CHECK(induced_subgraph(sg::k4(), sg::k4().vertices()) == sg::k4());
}

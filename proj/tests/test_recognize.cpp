#include <doctest.h>

#include <stdexcept>

#include "gsc/generating.hpp"
#include "gsc/recognize.hpp"
#include "support/smallgraphs.hpp"

using namespace gsc;
namespace sg = smallgraphs;

TEST_CASE("base graph predicates") {
  CHECK(is_triangle(sg::k3()));
  CHECK(!is_triangle(sg::p4()));
  CHECK(is_prism(sg::prism()));
  CHECK(!is_prism(sg::k33()));  // also cubic on 6 vertices, but triangle-free
  CHECK(!is_prism(sg::c6()));   // 2-regular
  CHECK(!is_prism(sg::k4()));
}

TEST_CASE("base members") {
  RecognitionResult tri = recognize(sg::k3());
  CHECK(tri.member);
  REQUIRE(tri.certificate);
  CHECK(tri.certificate->size() == 1);
  CHECK(build(*tri.certificate) == sg::k3());

  RecognitionResult prism = recognize(sg::prism());
  CHECK(prism.member);
  REQUIRE(prism.certificate);
  CHECK(prism.certificate->size() == 1);
  CHECK(prism.certificate->pieces[0].kind == PieceKind::Prism);
  CHECK(build(*prism.certificate) == sg::prism());
}

TEST_CASE("k4 minus decomposes along its shared edge") {
  RecognitionResult r = recognize(sg::k4_minus());
  CHECK(r.member);
  REQUIRE(r.certificate);
  CHECK(r.certificate->size() == 2);
  CHECK(build(*r.certificate) == sg::k4_minus());
}

TEST_CASE("non-members carry a trace") {
  RecognitionResult c6 = recognize(sg::c6());
  CHECK(!c6.member);
  CHECK(!c6.certificate);
  REQUIRE(!c6.trace.empty());
  CHECK(c6.trace[0].reason.find("membership needs exactly") != std::string::npos);

  // Right edge count, but neither a base graph nor clique-separable.
  RecognitionResult k33 = recognize(sg::k33());
  CHECK(!k33.member);
  REQUIRE(!k33.trace.empty());
  CHECK(k33.trace[0].reason.find("no edge or triangle cutset") != std::string::npos);

  // C4 fails on the edge count (4 != 5).
  CHECK(!recognize(sg::c4()).member);
}

TEST_CASE("recognition preconditions") {
  CHECK_THROWS_AS(recognize(sg::two_k2()), std::invalid_argument);
  CHECK_THROWS_AS(recognize(Graph(2)), std::invalid_argument);
  CHECK_THROWS_AS(recognize(Graph::from_edges(2, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("theorem-based oracle") {
  CHECK(recognize_via_theorem(sg::prism()));
  CHECK(recognize_via_theorem(sg::k3()));
  CHECK(!recognize_via_theorem(sg::c4()));   // m = 4 < 2n-3
  CHECK(!recognize_via_theorem(sg::k33()));  // m = 2n-3 but a stable cutset exists
  CHECK_THROWS_AS(recognize_via_theorem(sg::k4()), std::invalid_argument);  // m = 6 > 5
}

TEST_CASE("certificates rebuild random members exactly") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratingSequence s = random_gsc(1 + static_cast<int>(seed % 5), seed * 31 + 1);
    Graph g = build(s);
    RecognitionResult r = recognize(g);
    CHECK(r.member);
    REQUIRE(r.certificate);
    CHECK(is_valid(*r.certificate));
    CHECK(build(*r.certificate) == g);
  }
}

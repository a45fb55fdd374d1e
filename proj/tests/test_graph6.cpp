#include <doctest.h>

#include "gsc/graph6.hpp"
#include "support/smallgraphs.hpp"

using namespace gsc;
namespace sg = smallgraphs;

// Reference encodings frozen from independent graph6 tooling run on the
// exact labelings in smallgraphs.hpp.
TEST_CASE("encoding matches the reference strings") {
  CHECK(to_graph6(sg::k3()) == "Bw");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(2)) == "A?");
  CHECK(to_graph6(sg::c4()) == "Cl");
  CHECK(to_graph6(sg::p4()) == "Ch");
  CHECK(to_graph6(sg::k4()) == "C~");
  CHECK(to_graph6(sg::k4_minus()) == "C}");
  CHECK(to_graph6(sg::two_k2()) == "C`");
  CHECK(to_graph6(sg::prism()) == "E{Sw");
  CHECK(to_graph6(sg::k33()) == "EFz_");
  CHECK(to_graph6(sg::k23()) == "D]o");
  CHECK(to_graph6(sg::c5()) == "Dhc");
  CHECK(to_graph6(sg::c6()) == "EhEG");
}

TEST_CASE("decoding the reference strings") {
  CHECK(from_graph6("Bw") == sg::k3());
  CHECK(from_graph6("@") == Graph(1));
  CHECK(from_graph6("E{Sw") == sg::prism());
  CHECK(from_graph6("EFz_") == sg::k33());
  CHECK(from_graph6("C`") == sg::two_k2());
}

TEST_CASE("round trips") {
  for (const Graph& g : {sg::k3(), sg::p4(), sg::c4(), sg::c5(), sg::c6(), sg::k4(),
                         sg::k4_minus(), sg::prism(), sg::k33(), sg::k23(), sg::two_k2(),
                         Graph(0), Graph(1), Graph(62)}) {
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("parse errors name the offending byte") {
  // Character below ASCII 63.
  try {
    from_graph6("B ");
    FAIL("expected a parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset() == 1);
  }

  // Truncated edge bits.
  try {
    from_graph6("E{S");
    FAIL("expected a parse error");
  } catch (const Graph6ParseError& e) {
    CHECK(e.offset() == 3);
  }

  // Trailing garbage.
  CHECK_THROWS_AS(from_graph6("Bww"), Graph6ParseError);
  // Empty line.
  CHECK_THROWS_AS(from_graph6(""), Graph6ParseError);
  // Long-form marker.
  CHECK_THROWS_AS(from_graph6("~??~?????"), Graph6ParseError);
  // Nonzero padding bits: K3 is "Bw" (0b110110 shifted); "Bw" has padding 0,
  // while "B~" sets padding bits after the three edge bits.
  CHECK_THROWS_AS(from_graph6("B~"), Graph6ParseError);
}

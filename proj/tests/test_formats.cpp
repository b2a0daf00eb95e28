#include "doctest.h"

#include <string>

#include "snarklab/error.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/formats.hpp"
#include "snarklab/hist.hpp"

using namespace snarklab;

namespace {

constexpr const char* kT55 =
    "0(4,8,12)1(5,6,14)2(4,7,9)3(5,7,8)4(5)6(7,16)8(9)9(11)10(11,15,16)11(13)12(13,15)13(17)14(15,17)16(17)";

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("adjacency text parses") {
  CubicGraph g = parse_paper_adjacency(kT55);
  CHECK(g.order() == 18);
  CHECK(g.size() == 27);
  // Vertex 5 never appears as a key but reaches degree 3.
  CHECK(g.neighbors(5) == std::array<Vertex, 3>{1, 3, 4});
  CHECK(fixture("T888").graph.order() == 46);
}

TEST_CASE("paper adjacency ignores whitespace") {
  std::string spaced = "0( 4, 8,12 )\n1(5,6,14) 2(4,7,9)3(5,7,8)4(5)6(7,16)8(9)9(11)10(11,15,16)11(13)12(13,15)"
                       "13(17)\t14(15,17)16(17)";
  CHECK(parse_paper_adjacency(spaced) == parse_paper_adjacency(kT55));
}

TEST_CASE("paper adjacency errors") {
  CHECK(code_of([] { parse_paper_adjacency("0(1)"); }) == ErrorCode::NotCubic);
  CHECK(code_of([] { parse_paper_adjacency("0(1,2,3)1(0)"); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { parse_paper_adjacency("0(1,2,3"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_paper_adjacency("0(1,x)"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_paper_adjacency("0(0,1,2)"); }) == ErrorCode::NotSimple);
}

TEST_CASE("paper adjacency round trip") {
  for (const auto& name : fixture_names()) {
    const CubicGraph& g = fixture(name).graph;
    CHECK(parse_paper_adjacency(emit_paper_adjacency(g)) == g);
  }
}

TEST_CASE("graph6 decoding and encoding") {
  auto k4 = parse_graph6("C~\n");
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].order() == 4);
  CHECK(k4[0].size() == 6);
  CHECK(emit_graph6(k4[0]) == "C~");

  // Reference string from an independent graph6 writer for the catalog's
  // Petersen labelling.
  const CubicGraph& p = fixture("P10").graph;
  CHECK(emit_graph6(p) == "IheA@GUAo");
  auto back = parse_graph6("IheA@GUAo");
  REQUIRE(back.size() == 1);
  CHECK(back[0] == p);

  CHECK(parse_graph6("").empty());
  CHECK(parse_graph6("\n\n").size() == 0);
  CHECK(parse_graph6(">>graph6<<C~").size() == 1);
  CHECK(parse_graph6("C~\n\nIpT@GSS_W\n").size() == 2);
}

TEST_CASE("graph6 round trip on every fixture") {
  for (const auto& name : fixture_names()) {
    const CubicGraph& g = fixture(name).graph;
    auto parsed = parse_graph6(emit_graph6(g));
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0] == g);
  }
}

TEST_CASE("graph6 errors and strictness") {
  CHECK(code_of([] { parse_graph6("C~~"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("C"); }) == ErrorCode::MalformedGraph6);
  CHECK(code_of([] { parse_graph6("C\x7f"); }) == ErrorCode::MalformedGraph6);
  // A 4-cycle is not cubic.
  CHECK(code_of([] { parse_graph6("Cr"); }) == ErrorCode::NotCubic);
  CHECK(parse_graph6("Cr\nC~\n", false).size() == 1);
}

TEST_CASE("outer cycle declarations") {
  const CubicGraph& t55 = fixture("T(5,5)").graph;
  auto cycles = parse_outer_cycle_declaration("[10,15,14,17,16]", t55);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].count() == 5);

  const CubicGraph& t67 = fixture("T(6,7)").graph;
  auto six = parse_outer_cycle_declaration("[1,6,7,19,18,22]", t67);
  REQUIRE(six.size() == 1);
  CHECK(six[0].count() == 6);

  const CubicGraph& p = fixture("P10").graph;
  CHECK(code_of([&] { parse_outer_cycle_declaration("[0,1,2]", p); }) == ErrorCode::NonAdjacentPair);
  CHECK(code_of([&] { parse_outer_cycle_declaration("[0,1,2,3,4][4,9,6,1,0]", p); }) ==
        ErrorCode::OverlappingCycles);
  CHECK(parse_cycle_lists("[1,2] [3]") == std::vector<std::vector<Vertex>>{{1, 2}, {3}});
}

TEST_CASE("paper documents carry declarations") {
  PaperDocument doc = parse_paper_document(std::string("[10,15,14,17,16][2,7,3,8,9]\n") + kT55);
  REQUIRE(doc.outer_cycles);
  CHECK(doc.outer_cycles->size() == 2);
  CHECK_FALSE(parse_paper_document(kT55).outer_cycles);
}

TEST_CASE("format detection") {
  CHECK(detect_format(kT55) == TextFormat::Paper);
  CHECK(detect_format("[1,2]\n0(1)") == TextFormat::Paper);
  CHECK(detect_format("IheA@GUAo") == TextFormat::Graph6);
  CHECK(detect_format("C~") == TextFormat::Graph6);
  CHECK(parse_single_graph("C~").graph.order() == 4);
  CHECK(parse_single_graph(kT55).graph.order() == 18);
}

TEST_CASE("DOT export styling") {
  const Fixture& p = fixture("P10");
  auto oc = outer_cycles(p.graph, *p.hist);
  std::string dot = emit_dot(p.graph, p.hist->tree_edges, oc.edges);
  CHECK(count(dot, "[style=dashed]") == 6);
  CHECK(count(dot, "[style=solid]") == 9);
  std::string plain = emit_dot(p.graph);
  CHECK(count(plain, "dashed") == 0);
  CHECK(count(plain, " -- ") == 15);

  const Fixture& t = fixture("T888");
  auto toc = outer_cycles(t.graph, *t.hist);
  CHECK(count(emit_dot(t.graph, t.hist->tree_edges, toc.edges), "[style=dashed]") == 24);
}

#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "snarklab/certify.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/error.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/hist.hpp"

using namespace snarklab;

namespace {

std::vector<int> indices(const EdgeSubset& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != EdgeSubset::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Profile recomputed from scratch: the oracle's component sizes of the
// non-tree edges, after the oracle agrees the tree is a Hist.
OuterCycleProfile recomputed(const ConstructedHistSnark& c) {
  auto tree = indices(c.hist.tree_edges);
  REQUIRE(oracle::is_hist(c.graph, tree));
  return OuterCycleProfile(oracle::profile(c.graph, tree));
}

void check_output(const ConstructedHistSnark& c, const OuterCycleProfile& expected, int order) {
  CHECK(c.graph.order() == order);
  CHECK(recomputed(c) == expected);
  CHECK(c.profile == expected);
  CHECK(expected.sum() == order / 2 + 1);
  CHECK(certify_snark(c.graph).is_snark);
}

ConstructedHistSnark P() { return fixture_hist_snark("P10"); }
ConstructedHistSnark B() { return fixture_hist_snark("B18"); }

// Up to `limit` valid dot anchors for G = H = P10, in edge-index order.
std::vector<DotAnchors> petersen_anchor_choices(std::size_t limit) {
  const CubicGraph& p = fixture("P10").graph;
  std::vector<DotAnchors> out;
  for (int i = 0; i < p.size() && out.size() < limit; ++i) {
    for (int j = i + 1; j < p.size() && out.size() < limit; ++j) {
      Edge e1 = p.edge(i), e2 = p.edge(j);
      if (e1.shares_endpoint(e2)) continue;
      const Edge& e3 = p.edge((i + 2 * j) % p.size());
      DotAnchors a = complete_anchors(p, e1.u, e1.v, e2.u, e2.v, e3.u, e3.v);
      validate_anchors(p, p, a);
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("dot product") {
  const CubicGraph& p = fixture("P10").graph;
  auto anchors = petersen_anchor_choices(4);
  REQUIRE(anchors.size() == 4);
  for (const DotAnchors& a : anchors) {
    auto r = dot_product(p, p, a);
    CHECK(r.graph.order() == 18);
    CHECK(certify_snark(r.graph).is_snark);
    CHECK(r.ledger.roles.empty());
    CHECK(r.h_map[a.a3] == -1);
    CHECK(r.h_map[a.b3] == -1);
  }
  DotAnchors shared = complete_anchors(p, 0, 1, 1, 2, 0, 1);
  CHECK(code_of([&] { dot_product(p, p, shared); }) == ErrorCode::InvalidAnchors);
  DotAnchors not_edge = complete_anchors(p, 0, 1, 2, 3, 0, 1);
  not_edge.a1 = 0;
  not_edge.b1 = 2;
  CHECK(code_of([&] { dot_product(p, p, not_edge); }) == ErrorCode::InvalidAnchors);
}

TEST_CASE("bullet variants and triangle over many anchor choices") {
  const CubicGraph& p = fixture("P10").graph;
  auto anchors = petersen_anchor_choices(10);
  REQUIRE(anchors.size() == 10);
  for (const DotAnchors& a : anchors) {
    auto b1 = bullet(p, p, a, BulletVariant::B1);
    auto b2 = bullet(p, p, a, BulletVariant::B2);
    auto b3 = bullet(p, p, a, BulletVariant::B3);
    CHECK(b1.graph.order() == 20);
    CHECK(b2.graph.order() == 20);
    CHECK(b3.graph.order() == 22);
    CHECK(b3.ledger.roles.size() == 4);
    CHECK(b3.ledger.at("h1") == 18);
    CHECK(certify_snark(b1.graph).is_snark);
    CHECK(certify_snark(b2.graph).is_snark);
    CHECK(certify_snark(b3.graph).is_snark);

    Vertex c = p.neighbors(a.b1)[0] == a.a1 ? p.neighbors(a.b1)[1] : p.neighbors(a.b1)[0];
    Vertex d = -1;
    for (Vertex w : p.neighbors(a.b1)) {
      if (w != a.a1 && w != c) d = w;
    }
    auto t = triangle(p, p, TriangleAnchors{a, c, d});
    CHECK(t.graph.order() == 20);
    CHECK(t.ledger.at("q1") == 18);
    CHECK(t.ledger.at("q2") == 19);
    CHECK(certify_snark(t.graph).is_snark);
  }
}

TEST_CASE("triangle anchor validation") {
  const CubicGraph& p = fixture("P10").graph;
  DotAnchors a = petersen_anchor_choices(1).front();
  // c and d must be the two neighbours of b1 other than a1.
  TriangleAnchors bad{a, a.a1, a.a1};
  CHECK(code_of([&] { triangle(p, p, bad); }) == ErrorCode::InvalidAnchors);
  CHECK_THROWS_AS(NewVertexLedger{}.at("h1"), Error);
}

TEST_CASE("surgeries are deterministic") {
  const CubicGraph& p = fixture("P10").graph;
  DotAnchors a = petersen_anchor_choices(3).back();
  CHECK(bullet(p, p, a, BulletVariant::B3).graph == bullet(p, p, a, BulletVariant::B3).graph);
  auto u1 = union_disjoint(P(), B());
  auto u2 = union_disjoint(P(), B());
  CHECK(u1.graph == u2.graph);
  CHECK(u1.hist == u2.hist);
  CHECK(u1.provenance == u2.provenance);
}

TEST_CASE("union_disjoint") {
  check_output(union_disjoint(P(), P()), {6, 6}, 22);
  check_output(union_disjoint(P(), B()), {6, 10}, 30);
  check_output(union_disjoint(fixture_hist_snark("T55"), P()), {5, 5, 6}, 30);
}

TEST_CASE("union_merge") {
  check_output(union_merge(P(), 6, P(), 6), {11}, 20);
  check_output(union_merge(P(), 6, B(), 10), {15}, 28);
  CHECK(code_of([] { union_merge(P(), 5, P(), 6); }) == ErrorCode::ElementAbsent);
  CHECK(code_of([] { union_merge(P(), 6, P(), 7); }) == ErrorCode::ElementAbsent);
}

TEST_CASE("reduce_i") {
  check_output(reduce_i(P(), 6), {10}, 18);
  check_output(reduce_i(B(), 10), {14}, 26);
  CHECK(code_of([] { reduce_i(P(), 5); }) == ErrorCode::ElementAbsent);
}

TEST_CASE("reduce_ii") {
  auto once = reduce_ii(P());
  check_output(once, {5, 6}, 20);
  check_output(reduce_ii(once), {5, 5, 6}, 30);
  check_output(reduce_ii(B()), {5, 10}, 28);
}

TEST_CASE("reduce_iii") {
  check_output(reduce_iii(P()), {6, 6}, 22);
  check_output(reduce_iii(fixture_hist_snark("T55")), {5, 5, 6}, 30);
  check_output(reduce_iii(B()), {6, 10}, 30);
}

TEST_CASE("reduce_iv") {
  check_output(reduce_iv(P(), 6), {7, 8}, 28);
  check_output(reduce_iv(fixture_hist_snark("T55"), 5), {5, 7, 7}, 36);
  CHECK(code_of([] { reduce_iv(P(), 10); }) == ErrorCode::ElementAbsent);
}

TEST_CASE("role constants") {
  const PetersenRoles& pr = petersen_roles();
  const CubicGraph& p = fixture("P10").graph;
  CHECK(pr.inner_cycle.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(p.adjacent(pr.inner_cycle[i], pr.inner_cycle[(i + 1) % 5]));
  CHECK(std::find(pr.inner_cycle.begin(), pr.inner_cycle.end(), pr.b3) != pr.inner_cycle.end());
  CHECK(p.adjacent(pr.a3, pr.b3));

  const BlanusaRoles& br = blanusa_roles();
  const CubicGraph& b = fixture("B18").graph;
  CHECK(br.seven_cycle.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(b.adjacent(br.seven_cycle[i], br.seven_cycle[(i + 1) % 7]));
  CHECK(static_cast<int>(br.tree_edges.size()) == b.order() - 3);
}

TEST_CASE("provenance") {
  auto c = reduce_ii(union_merge(P(), 6, P(), 6));
  const Provenance& p = c.provenance;
  CHECK(p.construction == "reduce_ii");
  CHECK(p.order == c.graph.order());
  CHECK(p.profile == c.profile);
  CHECK(p.graph_hash == graph_hash(c.graph));
  CHECK(p.graph_hash.size() == 16);
  REQUIRE(p.inputs.size() == 1);
  CHECK(p.inputs[0].construction == "union_merge");
  CHECK(p.inputs[0].inputs.size() == 2);
  CHECK(p.inputs[0].inputs[0].fixture == "P10");
  CHECK_FALSE(p.anchors.empty());
  CHECK_FALSE(p.new_vertices.empty());
  for (const auto& [role, id] : p.new_vertices) CHECK(id < c.graph.order());

  CHECK(provenance_from_json(provenance_to_json(p)) == p);
  CHECK(provenance_from_json(provenance_to_json(p, 2)) == p);
  CHECK(code_of([] { provenance_from_json("{"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("fixture wrapping") {
  auto t = fixture_hist_snark("T(8,8)");
  CHECK(t.graph.order() == 30);
  CHECK(t.profile == OuterCycleProfile{8, 8});
  CHECK(t.provenance.construction == "fixture");
  CHECK(code_of([] { fixture_hist_snark("X1"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { fixture("nope"); }) == ErrorCode::UnknownFixture);
}

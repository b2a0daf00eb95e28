#include "doctest.h"

#include <algorithm>
#include <functional>

#include "snarklab/error.hpp"
#include "snarklab/graph.hpp"

using namespace snarklab;

namespace {

std::vector<std::vector<Vertex>> k4() { return {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}; }

std::vector<std::vector<Vertex>> petersen() {
  std::vector<std::vector<Vertex>> adj(10);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int i = 0; i < 5; ++i) {
    link(i, (i + 1) % 5);
    link(i, i + 5);
    link(5 + i, 5 + (i + 2) % 5);
  }
  return adj;
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

}  // namespace

TEST_CASE("build K4 and Petersen") {
  CubicGraph g = CubicGraph::build(k4());
  CHECK(g.order() == 4);
  CHECK(g.size() == 6);
  CubicGraph p = CubicGraph::build(petersen());
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
}

TEST_CASE("build rejects malformed adjacency") {
  auto adj = k4();
  adj[0] = {1, 2};
  CHECK(code_of([&] { CubicGraph::build(adj); }) == ErrorCode::NotCubic);

  adj = k4();
  adj[0] = {0, 2, 3};
  CHECK(code_of([&] { CubicGraph::build(adj); }) == ErrorCode::NotSimple);

  adj = k4();
  adj[0] = {1, 1, 3};
  CHECK(code_of([&] { CubicGraph::build(adj); }) == ErrorCode::NotSimple);

  // Prism with vertex 3 listing 1 instead of 0.
  std::vector<std::vector<Vertex>> prism = {{1, 2, 3}, {0, 2, 4}, {0, 1, 5}, {1, 4, 5}, {1, 3, 5}, {2, 3, 4}};
  CHECK(code_of([&] { CubicGraph::build(prism); }) == ErrorCode::Inconsistent);
}

TEST_CASE("canonical edge order is lexicographic and deterministic") {
  CubicGraph a = CubicGraph::build(petersen());
  auto adj = petersen();
  for (auto& l : adj) std::reverse(l.begin(), l.end());
  CubicGraph b = CubicGraph::build(adj);
  CHECK(a == b);
  for (int i = 1; i < a.size(); ++i) CHECK(a.edge(i - 1) < a.edge(i));
  for (const Edge& e : a.edges()) CHECK(e.u < e.v);
}

TEST_CASE("degree sum and adjacency agree") {
  CubicGraph p = CubicGraph::build(petersen());
  int sum = 0;
  for (Vertex v = 0; v < p.order(); ++v) {
    sum += 3;
    for (int i = 0; i < 3; ++i) {
      const Edge& e = p.edge(p.incident(v)[i]);
      CHECK(e.touches(v));
      CHECK(e.other(v) == p.neighbors(v)[i]);
    }
    CHECK(std::is_sorted(p.neighbors(v).begin(), p.neighbors(v).end()));
  }
  CHECK(sum == 2 * p.size());
  CHECK(p.adjacent(0, 1));
  CHECK_FALSE(p.adjacent(0, 2));
  CHECK_THROWS_AS(p.require_edge(0, 2), Error);
}

TEST_CASE("connected components") {
  CubicGraph p = CubicGraph::build(petersen());
  CHECK(connected_components(p, p.edge_subset()).size() == 1);
  EdgeSubset all = p.edge_subset();
  all.set();
  auto singles = connected_components(p, all);
  CHECK(singles.size() == 10);
  for (const auto& c : singles) CHECK(c.count() == 1);

  std::vector<std::vector<Vertex>> two = k4();
  for (auto l : k4()) {
    for (auto& v : l) v += 4;
    two.push_back(l);
  }
  CubicGraph g = CubicGraph::build(two);
  auto comps = connected_components(g, g.edge_subset());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].count() + comps[1].count() == 8);
  CHECK((comps[0] & comps[1]).none());
}

TEST_CASE("contains_cycle on induced subgraphs") {
  CubicGraph g = CubicGraph::build(k4());
  CubicGraph p = CubicGraph::build(petersen());
  VertexSubset path = p.vertex_subset();
  path.set(0);
  path.set(1);
  path.set(2);
  CHECK_FALSE(contains_cycle(p, path));
  VertexSubset tri = g.vertex_subset();
  tri.set(0);
  tri.set(1);
  tri.set(2);
  CHECK(contains_cycle(g, tri));
  VertexSubset all = p.vertex_subset();
  all.set();
  CHECK(contains_cycle(p, all));
}

TEST_CASE("boundary and edge subset helpers") {
  CubicGraph p = CubicGraph::build(petersen());
  VertexSubset outer = p.vertex_subset();
  for (int i = 0; i < 5; ++i) outer.set(i);
  CHECK(boundary(p, outer).count() == 5);
  std::vector<Edge> es = {Edge::of(1, 0), Edge::of(2, 7)};
  EdgeSubset s = edge_subset_of(p, es);
  CHECK(s.count() == 2);
  auto back = edges_of(p, s);
  CHECK(back == std::vector<Edge>{Edge{0, 1}, Edge{2, 7}});
}

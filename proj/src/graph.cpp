#include "snarklab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "snarklab/error.hpp"

namespace snarklab {

namespace {

std::string edge_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

CubicGraph CubicGraph::build(const std::vector<std::vector<Vertex>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    const auto& list = adjacency[v];
    if (list.size() != 3) {
      throw Error(ErrorCode::NotCubic,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(list.size()));
    }
    for (Vertex w : list) {
      if (w < 0 || w >= n) {
        throw Error(ErrorCode::Inconsistent,
                    "vertex " + std::to_string(v) + " lists out-of-range neighbor " + std::to_string(w));
      }
      if (w == v) throw Error(ErrorCode::NotSimple, "loop at vertex " + std::to_string(v));
      if (std::count(list.begin(), list.end(), w) > 1) {
        throw Error(ErrorCode::NotSimple, "parallel edge " + edge_text(v, w));
      }
      const auto& back = adjacency[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorCode::Inconsistent,
                    std::to_string(v) + " lists " + std::to_string(w) + " but not vice versa");
      }
      if (v < w) edges.push_back(Edge{v, w});
    }
  }
  return from_edges(n, edges);
}

CubicGraph CubicGraph::from_edges(int n, std::span<const Edge> input) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(input.size());
  for (const Edge& e : input) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::Inconsistent, "edge " + edge_text(e.u, e.v) + " out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::NotSimple, "loop at vertex " + std::to_string(e.u));
    edges.push_back(Edge::of(e.u, e.v));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::NotSimple, "parallel edge " + edge_text(dup->u, dup->v));
  }

  std::vector<int> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 3) {
      throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(degree[v]));
    }
  }

  CubicGraph g;
  g.edges_ = std::move(edges);
  g.neighbors_.assign(n, {});
  g.incident_.assign(n, {});
  std::vector<int> fill(n, 0);
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges_[i];
    for (Vertex end : {e.u, e.v}) {
      auto& slot = fill[end];
      g.neighbors_[end][slot] = e.other(end);
      g.incident_[end][slot] = i;
      ++slot;
    }
  }
  // Sorted edge order already yields ascending neighbor lists: for vertex v
  // every (w, v) with w < v precedes every (v, x).
  return g;
}

std::optional<int> CubicGraph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || a >= order()) return std::nullopt;
  const auto& nb = neighbors(a);
  for (std::size_t k = 0; k < 3; ++k) {
    if (nb[k] == b) return incident(a)[k];
  }
  return std::nullopt;
}

int CubicGraph::require_edge(Vertex a, Vertex b) const {
  auto idx = edge_index(a, b);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "no edge " + edge_text(a, b));
  return *idx;
}

std::vector<std::vector<Vertex>> CubicGraph::adjacency() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(neighbors_.size());
  for (const auto& nb : neighbors_) out.emplace_back(nb.begin(), nb.end());
  return out;
}

std::vector<VertexSubset> connected_components(const CubicGraph& g, const EdgeSubset& removed) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<VertexSubset> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.push_back(g.vertex_subset());
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().set(v);
      for (std::size_t k = 0; k < 3; ++k) {
        int e = g.incident(v)[k];
        if (!removed.empty() && removed.test(e)) continue;
        Vertex w = g.neighbors(v)[k];
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

bool contains_cycle(const CubicGraph& g, const VertexSubset& vertices) {
  // A forest satisfies |E| = |V| - #components; anything denser has a cycle.
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (!vertices.test(e.u) || !vertices.test(e.v)) continue;
    int a = find(e.u), b = find(e.v);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

EdgeSubset boundary(const CubicGraph& g, const VertexSubset& side) {
  EdgeSubset cut = g.edge_subset();
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (side.test(e.u) != side.test(e.v)) {
      cut.set(i);
    }
  }
  return cut;
}

EdgeSubset edge_subset_of(const CubicGraph& g, std::span<const Edge> edges) {
  EdgeSubset out = g.edge_subset();
  for (const Edge& e : edges) out.set(g.require_edge(e.u, e.v));
  return out;
}

std::vector<Edge> edges_of(const CubicGraph& g, const EdgeSubset& subset) {
  std::vector<Edge> out;
  for (auto i = subset.find_first(); i != EdgeSubset::npos; i = subset.find_next(i)) {
    out.push_back(g.edge(static_cast<int>(i)));
  }
  return out;
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::NonAdjacentPair: return "NonAdjacentPair";
    case ErrorCode::OverlappingCycles: return "OverlappingCycles";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotAHist: return "NotAHist";
    case ErrorCode::InvalidAnchors: return "InvalidAnchors";
    case ErrorCode::NoValidAnchors: return "NoValidAnchors";
    case ErrorCode::ElementAbsent: return "ElementAbsent";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::FixtureCorrupt: return "FixtureCorrupt";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace snarklab

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace snarklab {

using Vertex = int;

/// Undirected edge in canonical orientation (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool touches(Vertex w) const { return u == w || v == w; }
  bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Bitmask over vertex ids.
using VertexSubset = boost::dynamic_bitset<>;
/// Bitmask over canonical edge indices of the owning graph.
using EdgeSubset = boost::dynamic_bitset<>;

/// Simple 3-regular graph on vertices 0..n-1. Immutable once built.
///
/// Edges are stored in lexicographic order of (u, v); every EdgeSubset
/// handed around the library indexes into that order.
class CubicGraph {
 public:
  /// Validates and builds from per-vertex neighbor lists. Every vertex must
  /// list exactly three distinct neighbors and every listing must be mutual.
  static CubicGraph build(const std::vector<std::vector<Vertex>>& adjacency);

  /// Validates and builds from an unordered edge list on n vertices.
  static CubicGraph from_edges(int n, std::span<const Edge> edges);

  CubicGraph() = default;

  int order() const { return static_cast<int>(neighbors_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  /// Neighbors of v in ascending order.
  const std::array<Vertex, 3>& neighbors(Vertex v) const {
    return neighbors_[static_cast<std::size_t>(v)];
  }
  /// Edge indices incident to v, aligned with neighbors(v).
  const std::array<int, 3>& incident(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }

  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
  std::optional<int> edge_index(Vertex a, Vertex b) const;
  /// Like edge_index but throws InvalidArgument when a and b are not adjacent.
  int require_edge(Vertex a, Vertex b) const;

  VertexSubset vertex_subset() const { return VertexSubset(static_cast<std::size_t>(order())); }
  EdgeSubset edge_subset() const { return EdgeSubset(static_cast<std::size_t>(size())); }

  /// Adjacency lists in the form accepted by build().
  std::vector<std::vector<Vertex>> adjacency() const;

  bool operator==(const CubicGraph& other) const { return edges_ == other.edges_ && order() == other.order(); }

 private:
  std::vector<std::array<Vertex, 3>> neighbors_;
  std::vector<std::array<int, 3>> incident_;
  std::vector<Edge> edges_;
};

/// Components of g after deleting `removed` (pass an empty set for none).
std::vector<VertexSubset> connected_components(const CubicGraph& g, const EdgeSubset& removed);

/// True iff the subgraph induced by `vertices` contains a cycle.
bool contains_cycle(const CubicGraph& g, const VertexSubset& vertices);

/// Edges with exactly one endpoint in `side`.
EdgeSubset boundary(const CubicGraph& g, const VertexSubset& side);

EdgeSubset edge_subset_of(const CubicGraph& g, std::span<const Edge> edges);
std::vector<Edge> edges_of(const CubicGraph& g, const EdgeSubset& subset);

}  // namespace snarklab

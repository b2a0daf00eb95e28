#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

/// Caps for the exponential searches. Exceeding a cap raises
/// SizeCapExceeded rather than running unbounded.
struct Limits {
  int max_vertices = 200;
};

/// Length of a shortest cycle (0 only for an acyclic graph, which a cubic
/// graph never is).
int girth(const CubicGraph& g);

struct CyclicConnectivity {
  bool holds = true;
  /// Smallest violating cut when `holds` is false.
  std::vector<Edge> cut;
};

/// Is every edge cut separating two cycle-carrying parts of size >= k?
/// Exhaustive over edge subsets of size <= k-2, each extended by the bridges
/// of the remaining graph. Supports 1 <= k <= 5.
CyclicConnectivity cyclic_edge_connectivity_at_least(const CubicGraph& g, int k);

struct EdgeColoring {
  bool colorable = false;
  /// Colors 1..3 per edge index when colorable.
  std::vector<int> colors;
  /// Search nodes visited; reported for diagnostics only.
  std::uint64_t nodes = 0;
};

/// Exact 3-edge-colorability. A "false" verdict means the search space was
/// exhausted.
EdgeColoring three_edge_coloring(const CubicGraph& g, const Limits& limits = {});
inline bool is_three_edge_colorable(const CubicGraph& g, const Limits& limits = {}) {
  return three_edge_coloring(g, limits).colorable;
}

/// Every vertex sees colors {1,2,3} exactly once.
bool is_proper_three_edge_coloring(const CubicGraph& g, const std::vector<int>& colors);

struct SnarkCertificate {
  int order = 0;
  bool connected = false;
  int girth = 0;
  std::optional<bool> cyclically_4_edge_connected;
  std::vector<Edge> violating_cut;
  std::optional<bool> three_edge_colorable;
  std::vector<int> coloring;
  bool coloring_exhausted = false;
  bool is_snark = false;
  /// Names of the checks that actually ran, in order.
  std::vector<std::string> checks_run;
};

struct CertifyOptions {
  Limits limits;
  /// Stop at the first failed condition.
  bool short_circuit = false;
};

SnarkCertificate certify_snark(const CubicGraph& g, const CertifyOptions& options = {});

}  // namespace snarklab

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snarklab/certify.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/hist.hpp"

namespace snarklab {

/// Roles for the dot product G·H: e1 = a1b1 and e2 = a2b2 are independent
/// edges of G, e3 = a3b3 is an edge of H with N(a3) - b3 = {x1, y1} and
/// N(b3) - a3 = {x2, y2}.
struct DotAnchors {
  Vertex a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  Vertex a3 = 0, b3 = 0;
  Vertex x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  bool operator==(const DotAnchors&) const = default;
};

/// Dot anchors plus the split of N(b1) - a1 into c (whose edge to b1 is cut)
/// and d.
struct TriangleAnchors {
  DotAnchors dot;
  Vertex c = 0, d = 0;

  bool operator==(const TriangleAnchors&) const = default;
};

/// Fills x1, y1, x2, y2 in ascending order from a3, b3.
DotAnchors complete_anchors(const CubicGraph& h, Vertex a1, Vertex b1, Vertex a2, Vertex b2, Vertex a3, Vertex b3);

enum class BulletVariant { B1, B2, B3 };

/// Ids given to the vertices a surgery adds, keyed by role (h1, j1, h2, j2,
/// q1, q2). Ids start at n_G + n_H - 2 and follow that role order.
struct NewVertexLedger {
  std::vector<std::pair<std::string, Vertex>> roles;

  Vertex at(std::string_view role) const;
};

/// Output of a raw surgery. G keeps its vertex ids; the surviving vertices of
/// H follow in their original order; new vertices come last.
struct SurgeryResult {
  CubicGraph graph;
  std::vector<Vertex> h_map;  // H id -> output id, -1 for a3 and b3
  NewVertexLedger ledger;
};

SurgeryResult dot_product(const CubicGraph& g, const CubicGraph& h, const DotAnchors& anchors);
SurgeryResult bullet(const CubicGraph& g, const CubicGraph& h, const DotAnchors& anchors, BulletVariant variant);
SurgeryResult triangle(const CubicGraph& g, const CubicGraph& h, const TriangleAnchors& anchors);

/// Throws InvalidAnchors describing the first violated condition.
void validate_anchors(const CubicGraph& g, const CubicGraph& h, const DotAnchors& anchors);
void validate_anchors(const CubicGraph& g, const CubicGraph& h, const TriangleAnchors& anchors);

/// Audit trail of how a graph was obtained. Anchor vertex ids refer to the
/// input graphs of the step that used them.
struct Provenance {
  std::string construction;
  std::string fixture;
  int order = 0;
  std::string graph_hash;
  OuterCycleProfile profile;
  std::vector<std::pair<std::string, int>> parameters;
  std::vector<std::pair<std::string, Vertex>> anchors;
  std::vector<std::pair<std::string, Vertex>> new_vertices;
  std::vector<Provenance> inputs;

  bool operator==(const Provenance&) const = default;
};

std::string provenance_to_json(const Provenance& p, int indent = -1);
Provenance provenance_from_json(std::string_view text);

/// FNV-1a over the graph6 encoding, as 16 hex digits.
std::string graph_hash(const CubicGraph& g);

struct ConstructedHistSnark {
  CubicGraph graph;
  Hist hist;
  OuterCycleProfile profile;
  Provenance provenance;
};

/// Post-construction checks. The Hist and its profile are always verified;
/// the snark conditions are optional because raw inputs need not be snarks.
struct ConstructionOptions {
  /// Girth >= 5 and cyclic 4-edge-connectivity.
  bool verify_snark_structure = true;
  /// Exhaustive non-colorability as well (expensive on large outputs).
  bool verify_colorability = false;
  Limits limits;
};

/// Wraps a graph with a known Hist as a leaf of a provenance tree.
ConstructedHistSnark wrap_hist_snark(std::string name, CubicGraph graph, Hist hist);

/// G(e1,e2)•H(e3) with both e1 and e2 subdivided: profile G ∪ profile H.
ConstructedHistSnark union_disjoint(const ConstructedHistSnark& g, const ConstructedHistSnark& h,
                                    const ConstructionOptions& options = {});

/// Triangle product joining a length-k outer cycle of G with a length-l
/// outer cycle of H into one cycle of length k + l - 1.
ConstructedHistSnark union_merge(const ConstructedHistSnark& g, int k, const ConstructedHistSnark& h, int l,
                                 const ConstructionOptions& options = {});

/// Dot product with the Petersen graph: one outer cycle k -> k + 4.
ConstructedHistSnark reduce_i(const ConstructedHistSnark& g, int k, const ConstructionOptions& options = {});

/// Bullet B1 with the Petersen graph: adds an outer 5-cycle.
ConstructedHistSnark reduce_ii(const ConstructedHistSnark& g, const ConstructionOptions& options = {});

/// union_disjoint with the Petersen graph: adds an outer 6-cycle.
ConstructedHistSnark reduce_iii(const ConstructedHistSnark& g, const ConstructionOptions& options = {});

/// Bullet B1 with the Blanuša snark: k -> k + 2 and adds an outer 7-cycle.
ConstructedHistSnark reduce_iv(const ConstructedHistSnark& g, int k, const ConstructionOptions& options = {});

/// Fixed roles inside the labeled Petersen graph and Blanuša snark used by
/// the reductions. Validated on first use; a failure throws FixtureCorrupt.
struct PetersenRoles {
  std::vector<Vertex> inner_cycle;  // Ĉ, the 5-cycle removed from U
  Vertex a3 = 0, b3 = 0;            // e3 for reduce_i, b3 on Ĉ
  std::vector<Vertex> outer_cycle;  // C5 for reduce_ii
  DotAnchors bullet_roles;          // a3, b3, x1, y1, x2, y2 for reduce_ii
};
struct BlanusaRoles {
  Vertex a3 = 0, b3 = 0;
  std::vector<Vertex> seven_cycle;  // the new outer 7-cycle, cyclic order
  std::vector<Edge> tree_edges;     // spanning tree of B18 - a3 - b3
};
const PetersenRoles& petersen_roles();
const BlanusaRoles& blanusa_roles();

}  // namespace snarklab

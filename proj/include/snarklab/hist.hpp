#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

/// Spanning tree whose vertices all have degree 1 or 3.
struct Hist {
  EdgeSubset tree_edges;

  bool operator==(const Hist&) const = default;
};

/// Sorted multiset of outer-cycle lengths.
class OuterCycleProfile {
 public:
  OuterCycleProfile() = default;
  explicit OuterCycleProfile(std::vector<int> lengths);
  OuterCycleProfile(std::initializer_list<int> lengths) : OuterCycleProfile(std::vector<int>(lengths)) {}

  const std::vector<int>& lengths() const { return lengths_; }
  std::size_t size() const { return lengths_.size(); }
  bool empty() const { return lengths_.empty(); }
  int sum() const;
  int max() const { return lengths_.empty() ? 0 : lengths_.back(); }

  bool contains(int length) const;
  /// Removes one occurrence; throws ElementAbsent if missing.
  OuterCycleProfile without(int length) const;
  OuterCycleProfile with(int length) const;
  OuterCycleProfile merged(const OuterCycleProfile& other) const;

  /// "{5,6,6}"
  std::string to_string() const;

  auto operator<=>(const OuterCycleProfile&) const = default;

 private:
  std::vector<int> lengths_;
};

/// Why `tree_edges` is not a Hist of g, or nullopt when it is.
std::optional<std::string> hist_violation(const CubicGraph& g, const EdgeSubset& tree_edges);
inline bool is_hist(const CubicGraph& g, const EdgeSubset& tree_edges) {
  return !hist_violation(g, tree_edges).has_value();
}

/// The Hist whose internal (degree-3) vertices are exactly `internal`:
/// every edge touching an internal vertex.
Hist hist_from_internal(const CubicGraph& g, const VertexSubset& internal);

/// Complement of the given outer cycles; throws NotAHist if it is not one.
Hist hist_from_outer_cycles(const CubicGraph& g, const std::vector<EdgeSubset>& cycles);

struct OuterCycles {
  /// Vertex sequences in cyclic order, each starting at its smallest vertex.
  std::vector<std::vector<Vertex>> vertices;
  std::vector<EdgeSubset> edges;
  OuterCycleProfile profile;
};

/// Splits the non-tree edges into vertex-disjoint cycles on the leaves.
OuterCycles outer_cycles(const CubicGraph& g, const Hist& hist);

struct HistSearchOptions {
  int max_vertices = 100;
};

/// Exhaustive: nullopt means no Hist exists.
std::optional<Hist> find_hist(const CubicGraph& g, const HistSearchOptions& options = {});

/// Up to `limit` distinct Hists in a fixed search order.
std::vector<Hist> enumerate_hists(const CubicGraph& g, std::size_t limit,
                                  const HistSearchOptions& options = {});

struct CdcOptions {
  int max_vertices = 20;
};

/// A cycle double cover of g that includes every outer cycle of `hist`, each
/// cycle given as an edge set. Cycles are circuits and are used at most once.
std::optional<std::vector<EdgeSubset>> cdc_with_outer_cycles(const CubicGraph& g, const Hist& hist,
                                                             const CdcOptions& options = {});

/// All circuits of g as edge sets (exponential; intended for small graphs).
std::vector<EdgeSubset> all_cycles(const CubicGraph& g);

}  // namespace snarklab

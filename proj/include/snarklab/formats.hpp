#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snarklab/graph.hpp"

namespace snarklab {

enum class TextFormat { Auto, Graph6, Paper, Dot };

/// Parses `v(w1,w2,...)` blocks, e.g. `0(4,8,12)1(5,6,14)...`. Each block adds
/// the edges {v, wi}; an edge may be listed under either endpoint but only once.
/// Whitespace is ignored.
CubicGraph parse_paper_adjacency(std::string_view text);

/// Lists every edge once, under its smaller endpoint.
std::string emit_paper_adjacency(const CubicGraph& g);

/// Bracketed vertex sequences such as `[10,15,14,17,16] [2,7,3,8,9]`.
std::vector<std::vector<Vertex>> parse_cycle_lists(std::string_view text);

/// Resolves each bracketed cycle (cyclic order, wrap-around) to its edge set
/// in g. Consecutive vertices must be adjacent and cycles pairwise disjoint.
std::vector<EdgeSubset> parse_outer_cycle_declaration(std::string_view text, const CubicGraph& g);

/// A paper-format document: optional cycle-declaration lines (starting with
/// '[') followed by the adjacency text.
struct PaperDocument {
  CubicGraph graph;
  std::optional<std::vector<EdgeSubset>> outer_cycles;
};
PaperDocument parse_paper_document(std::string_view text);

/// Decoded graph6 line before any cubic validation.
struct Graph6Graph {
  int order = 0;
  std::vector<Edge> edges;
};
Graph6Graph decode_graph6(std::string_view line);

/// One graph per non-empty line. In strict mode a non-cubic graph throws
/// NotCubic; otherwise it is skipped.
std::vector<CubicGraph> parse_graph6(std::string_view text, bool strict = true);

std::string emit_graph6(const CubicGraph& g);

/// DOT export. Tree edges are drawn solid and outer-cycle edges dashed; with
/// neither supplied, edges carry no style.
std::string emit_dot(const CubicGraph& g,
                     const std::optional<EdgeSubset>& tree_edges = std::nullopt,
                     std::span<const EdgeSubset> outer_cycles = {});

/// Leading '[' or a `digits(` prefix means paper format; anything else graph6.
TextFormat detect_format(std::string_view text);

/// Parses exactly one graph in the given (or detected) format.
PaperDocument parse_single_graph(std::string_view text, TextFormat format = TextFormat::Auto);

}  // namespace snarklab

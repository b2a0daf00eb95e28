#include "snarklab/formats.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "snarklab/error.hpp"

namespace snarklab {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kGraph6MaxOrder = 258047;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    skip_space();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 100000000) fail("vertex id too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected vertex id");
    return static_cast<int>(value);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

CubicGraph parse_paper_adjacency(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty adjacency text");
  std::set<Edge> seen;
  std::vector<Edge> edges;
  int max_id = -1;
  while (!cur.done()) {
    const int v = cur.number();
    max_id = std::max(max_id, v);
    cur.expect('(');
    do {
      const int w = cur.number();
      max_id = std::max(max_id, w);
      if (v == w) throw Error(ErrorCode::NotSimple, "loop at vertex " + std::to_string(v));
      Edge e = Edge::of(v, w);
      if (!seen.insert(e).second) {
        throw Error(ErrorCode::DuplicateEdge,
                    "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} listed twice");
      }
      edges.push_back(e);
      if (cur.peek(',')) {
        cur.expect(',');
        continue;
      }
      break;
    } while (true);
    cur.expect(')');
  }
  return CubicGraph::from_edges(max_id + 1, edges);
}

std::string emit_paper_adjacency(const CubicGraph& g) {
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (w > v) later.push_back(w);
    }
    if (later.empty()) continue;
    out += std::to_string(v) + "(";
    for (std::size_t i = 0; i < later.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(later[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<std::vector<Vertex>> parse_cycle_lists(std::string_view text) {
  Cursor cur(text);
  std::vector<std::vector<Vertex>> cycles;
  while (!cur.done()) {
    cur.expect('[');
    std::vector<Vertex> cycle{cur.number()};
    while (cur.peek(',')) {
      cur.expect(',');
      cycle.push_back(cur.number());
    }
    cur.expect(']');
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<EdgeSubset> parse_outer_cycle_declaration(std::string_view text, const CubicGraph& g) {
  std::vector<EdgeSubset> out;
  VertexSubset used = g.vertex_subset();
  for (const auto& cycle : parse_cycle_lists(text)) {
    if (cycle.size() < 3) throw Error(ErrorCode::SyntaxError, "a cycle needs at least 3 vertices");
    EdgeSubset edges = g.edge_subset();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex a = cycle[i];
      Vertex b = cycle[(i + 1) % cycle.size()];
      if (a < 0 || a >= g.order()) {
        throw Error(ErrorCode::NonAdjacentPair, "vertex " + std::to_string(a) + " not in graph");
      }
      if (used.test(a)) {
        throw Error(ErrorCode::OverlappingCycles, "vertex " + std::to_string(a) + " appears twice");
      }
      used.set(a);
      auto idx = g.edge_index(a, b);
      if (!idx) {
        throw Error(ErrorCode::NonAdjacentPair,
                    std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
      }
      edges.set(*idx);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

PaperDocument parse_paper_document(std::string_view text) {
  std::string cycles_text;
  std::string adjacency_text;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      cycles_text += line;
      cycles_text += '\n';
    } else {
      adjacency_text += line;
      adjacency_text += '\n';
    }
  }
  PaperDocument doc{parse_paper_adjacency(adjacency_text), std::nullopt};
  if (!trim(cycles_text).empty()) doc.outer_cycles = parse_outer_cycle_declaration(cycles_text, doc.graph);
  return doc;
}

Graph6Graph decode_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw Error(ErrorCode::MalformedGraph6, "empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw Error(ErrorCode::MalformedGraph6, "byte out of graph6 range");
  }
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) {
      throw Error(ErrorCode::MalformedGraph6, "unsupported graph6 size field");
    }
    n = (long(line[1] - 63) << 12) | (long(line[2] - 63) << 6) | long(line[3] - 63);
    pos = 4;
  }
  if (n > kGraph6MaxOrder) throw Error(ErrorCode::MalformedGraph6, "graph too large");
  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(line.size() - pos) != bytes) {
    throw Error(ErrorCode::MalformedGraph6,
                "expected " + std::to_string(bytes) + " data bytes, got " + std::to_string(line.size() - pos));
  }
  Graph6Graph out;
  out.order = static_cast<int>(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + static_cast<std::size_t>(k / 6)] - 63;
      if (byte & (1 << (5 - k % 6))) out.edges.push_back(Edge{i, j});
    }
  }
  return out;
}

std::vector<CubicGraph> parse_graph6(std::string_view text, bool strict) {
  std::vector<CubicGraph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    Graph6Graph raw = decode_graph6(line);
    try {
      out.push_back(CubicGraph::from_edges(raw.order, raw.edges));
    } catch (const Error& e) {
      if (strict || e.code() != ErrorCode::NotCubic) throw;
    }
  }
  return out;
}

std::string emit_graph6(const CubicGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::string emit_dot(const CubicGraph& g, const std::optional<EdgeSubset>& tree_edges,
                     std::span<const EdgeSubset> outer_cycles) {
  EdgeSubset outer = g.edge_subset();
  for (const auto& c : outer_cycles) outer |= c;
  if (outer_cycles.empty() && tree_edges) outer = ~*tree_edges;

  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    out << "  " << e.u << " -- " << e.v;
    if (outer.test(i)) {
      out << " [style=dashed]";
    } else if (tree_edges && tree_edges->test(i)) {
      out << " [style=solid]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

TextFormat detect_format(std::string_view text) {
  text = trim(text);
  if (text.empty()) return TextFormat::Graph6;
  if (text.front() == '[') return TextFormat::Paper;
  std::size_t i = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i > 0 && i < text.size() && text[i] == '(') return TextFormat::Paper;
  return TextFormat::Graph6;
}

PaperDocument parse_single_graph(std::string_view text, TextFormat format) {
  if (format == TextFormat::Auto) format = detect_format(text);
  switch (format) {
    case TextFormat::Paper:
      return parse_paper_document(text);
    case TextFormat::Graph6: {
      auto graphs = parse_graph6(text, true);
      if (graphs.size() != 1) {
        throw Error(ErrorCode::MalformedGraph6,
                    "expected exactly one graph, found " + std::to_string(graphs.size()));
      }
      return PaperDocument{std::move(graphs.front()), std::nullopt};
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "format cannot be parsed as input");
  }
}

}  // namespace snarklab

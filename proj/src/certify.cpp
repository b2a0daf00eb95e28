#include "snarklab/certify.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>

#include "snarklab/error.hpp"

namespace snarklab {

int girth(const CubicGraph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent_edge(n);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent_edge[s] = -1;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (int k = 0; k < 3; ++k) {
        Vertex w = g.neighbors(v)[k];
        int e = g.incident(v)[k];
        if (e == parent_edge[v]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent_edge[w] = e;
          queue.push(w);
        } else {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
    while (!queue.empty()) queue.pop();
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

namespace {

// Bridges of g minus `removed` (iterative Tarjan low-link).
std::vector<int> bridges(const CubicGraph& g, const EdgeSubset& removed) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> out;
  struct Frame {
    Vertex v;
    int via;
    int next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < 3) {
        const int k = f.next++;
        const int e = g.incident(f.v)[k];
        if (e == f.via || removed.test(e)) continue;
        const Vertex w = g.neighbors(f.v)[k];
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > disc[parent.v]) out.push_back(done.via);
      }
    }
  }
  return out;
}

struct CutSearch {
  const CubicGraph& g;
  int k;
  std::optional<EdgeSubset> best;

  // Consider every proper union of the components of g - removed as one side.
  void consider(const EdgeSubset& removed) {
    auto comps = connected_components(g, removed);
    if (comps.size() < 2) return;
    if (comps.size() > 16) return;  // cannot happen for |removed| <= 5
    const std::size_t masks = std::size_t{1} << (comps.size() - 1);
    for (std::size_t mask = 1; mask < masks * 2 - 1; ++mask) {
      // Fix the last component on the complement side to skip mirrored sides.
      if (mask & (std::size_t{1} << (comps.size() - 1))) continue;
      VertexSubset side = g.vertex_subset();
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (mask & (std::size_t{1} << c)) side |= comps[c];
      }
      EdgeSubset cut = boundary(g, side);
      const auto size = cut.count();
      if (size >= static_cast<std::size_t>(k)) continue;
      if (best && best->count() <= size) continue;
      if (!contains_cycle(g, side) || !contains_cycle(g, ~side)) continue;
      best = std::move(cut);
    }
  }

  void stage(EdgeSubset& removed) {
    consider(removed);
    for (int b : bridges(g, removed)) {
      removed.set(b);
      consider(removed);
      removed.reset(b);
    }
  }

  // Enumerate all removal sets of exactly `size` edges with indices >= from.
  void enumerate(EdgeSubset& removed, int size, int from) {
    if (size == 0) {
      stage(removed);
      return;
    }
    for (int e = from; e <= g.size() - size; ++e) {
      removed.set(e);
      enumerate(removed, size - 1, e + 1);
      removed.reset(e);
    }
  }
};

}  // namespace

CyclicConnectivity cyclic_edge_connectivity_at_least(const CubicGraph& g, int k) {
  if (k < 1 || k > 5) throw Error(ErrorCode::InvalidArgument, "cyclic connectivity supports k in 1..5");
  CyclicConnectivity result;
  if (k == 1) return result;
  CutSearch search{g, k, std::nullopt};
  EdgeSubset removed = g.edge_subset();
  // A smallest cyclic cut of size s is found at stage s-1: removing all but
  // one of its edges turns the last one into a bridge.
  for (int size = 0; size <= k - 2 && !search.best; ++size) {
    search.enumerate(removed, size, 0);
  }
  if (search.best) {
    result.holds = false;
    result.cut = edges_of(g, *search.best);
  }
  return result;
}

namespace {

// Vertex-by-vertex colouring search. The uncoloured remainder only depends on
// the colours of the frontier edges (one endpoint processed), so failed
// frontier states are memoised up to permutation of the three colours.
class ColoringSearch {
 public:
  explicit ColoringSearch(const CubicGraph& g) : g_(g), colors_(g.size(), 0) {
    const int n = g.order();
    order_ = narrowest_order(g);
    position_.assign(n, 0);
    for (int i = 0; i < n; ++i) position_[order_[i]] = i;
    frontier_.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      for (int e = 0; e < g.size(); ++e) {
        const Edge& edge = g.edge(e);
        const bool a = position_[edge.u] < i;
        const bool b = position_[edge.v] < i;
        if (a != b) frontier_[i].push_back(e);
      }
    }
    failed_.resize(n + 1);
    failed_wide_.resize(n + 1);
  }

  EdgeColoring run() {
    EdgeColoring out;
    out.colorable = search(0);
    out.nodes = nodes_;
    if (out.colorable) out.colors = colors_;
    return out;
  }

 private:
  // Greedy "most placed neighbours first", ties broken by BFS distance from
  // the start; every start is tried and the narrowest frontier wins.
  static std::vector<Vertex> narrowest_order(const CubicGraph& g) {
    const int n = g.order();
    std::vector<Vertex> best;
    std::pair<int, long> best_cost{std::numeric_limits<int>::max(), 0};
    std::vector<int> dist(n), seen(n);
    std::vector<char> placed(n);
    std::vector<Vertex> order;
    for (Vertex s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), n);
      dist[s] = 0;
      std::queue<Vertex> queue;
      queue.push(s);
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v)) {
          if (dist[w] == n) {
            dist[w] = dist[v] + 1;
            queue.push(w);
          }
        }
      }
      std::fill(seen.begin(), seen.end(), 0);
      std::fill(placed.begin(), placed.end(), 0);
      order.clear();
      int width = 0, widest = 0;
      long total = 0;
      for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
          if (placed[v]) continue;
          if (pick < 0 || seen[v] > seen[pick] || (seen[v] == seen[pick] && dist[v] < dist[pick])) pick = v;
        }
        placed[pick] = 1;
        order.push_back(pick);
        width += 3 - 2 * seen[pick];
        widest = std::max(widest, width);
        total += width;
        for (Vertex w : g.neighbors(pick)) ++seen[w];
      }
      if (std::pair{widest, total} < best_cost) {
        best_cost = {widest, total};
        best = order;
      }
    }
    return best;
  }

  // Frontier colours relabelled in order of first appearance, two bits each.
  // Frontiers wider than 32 edges fall back to a string key.
  std::uint64_t key(int step) const {
    std::uint64_t k = 0;
    int relabel[4] = {0, 0, 0, 0};
    int next = 1;
    for (int e : frontier_[step]) {
      int c = colors_[e];
      if (!relabel[c]) relabel[c] = next++;
      k = (k << 2) | static_cast<std::uint64_t>(relabel[c]);
    }
    return k;
  }
  std::string wide_key(int step) const {
    std::string k;
    int relabel[4] = {0, 0, 0, 0};
    int next = 1;
    for (int e : frontier_[step]) {
      int c = colors_[e];
      if (!relabel[c]) relabel[c] = next++;
      k.push_back(static_cast<char>('0' + relabel[c]));
    }
    return k;
  }

  bool known_failure(int step) const {
    if (frontier_[step].size() <= 32) return failed_[step].count(key(step)) > 0;
    return failed_wide_[step].count(wide_key(step)) > 0;
  }
  void record_failure(int step) {
    if (frontier_[step].size() <= 32) {
      failed_[step].insert(key(step));
    } else {
      failed_wide_[step].insert(wide_key(step));
    }
  }

  bool endpoint_ok(Vertex w) const {
    int mask = 0;
    for (int e : g_.incident(w)) {
      int c = colors_[e];
      if (!c) continue;
      if (mask & (1 << c)) return false;
      mask |= 1 << c;
    }
    return true;
  }

  bool search(int step) {
    ++nodes_;
    if (step == g_.order()) return true;
    if (known_failure(step)) return false;

    const Vertex v = order_[step];
    int used = 0;
    std::vector<int> fresh;
    for (int e : g_.incident(v)) {
      if (colors_[e]) {
        used |= 1 << colors_[e];
      } else {
        fresh.push_back(e);
      }
    }
    std::vector<int> palette;
    for (int c = 1; c <= 3; ++c) {
      if (!(used & (1 << c))) palette.push_back(c);
    }
    // Colours at v are already distinct, so |palette| == |fresh|.
    bool ok = false;
    do {
      bool consistent = true;
      for (std::size_t i = 0; i < fresh.size(); ++i) colors_[fresh[i]] = palette[i];
      for (int e : fresh) {
        if (!endpoint_ok(g_.edge(e).other(v))) {
          consistent = false;
          break;
        }
      }
      if (consistent && search(step + 1)) {
        ok = true;
        break;
      }
      // All colourings of the first vertex are equivalent up to symmetry.
      if (step == 0 || fresh.empty()) break;
    } while (std::next_permutation(palette.begin(), palette.end()));
    if (!ok) {
      for (int e : fresh) colors_[e] = 0;
      record_failure(step);
    }
    return ok;
  }

  const CubicGraph& g_;
  std::vector<int> colors_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<std::vector<int>> frontier_;
  std::vector<std::unordered_set<std::uint64_t>> failed_;
  std::vector<std::unordered_set<std::string>> failed_wide_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

EdgeColoring three_edge_coloring(const CubicGraph& g, const Limits& limits) {
  if (g.order() > limits.max_vertices) {
    throw Error(ErrorCode::SizeCapExceeded, "3-edge-coloring search limited to " +
                                                std::to_string(limits.max_vertices) + " vertices");
  }
  return ColoringSearch(g).run();
}

bool is_proper_three_edge_coloring(const CubicGraph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.size()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    int mask = 0;
    for (int e : g.incident(v)) {
      int c = colors[e];
      if (c < 1 || c > 3) return false;
      mask |= 1 << c;
    }
    if (mask != 0b1110) return false;
  }
  return true;
}

SnarkCertificate certify_snark(const CubicGraph& g, const CertifyOptions& options) {
  SnarkCertificate cert;
  cert.order = g.order();

  cert.checks_run.push_back("connectivity");
  cert.connected = connected_components(g, g.edge_subset()).size() <= 1;
  if (!cert.connected && options.short_circuit) return cert;

  cert.checks_run.push_back("girth");
  cert.girth = girth(g);
  if (cert.girth < 5 && options.short_circuit) return cert;

  cert.checks_run.push_back("cyclic-connectivity");
  auto cyclic = cyclic_edge_connectivity_at_least(g, 4);
  cert.cyclically_4_edge_connected = cyclic.holds;
  cert.violating_cut = std::move(cyclic.cut);
  if (!cyclic.holds && options.short_circuit) return cert;

  cert.checks_run.push_back("3-edge-coloring");
  auto coloring = three_edge_coloring(g, options.limits);
  cert.three_edge_colorable = coloring.colorable;
  cert.coloring = std::move(coloring.colors);
  cert.coloring_exhausted = !coloring.colorable;

  cert.is_snark = cert.connected && cert.girth >= 5 && *cert.cyclically_4_edge_connected &&
                  !*cert.three_edge_colorable;
  return cert;
}

}  // namespace snarklab

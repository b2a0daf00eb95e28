#include "snarklab/hist.hpp"

#include <algorithm>
#include <numeric>

#include "snarklab/error.hpp"

namespace snarklab {

OuterCycleProfile::OuterCycleProfile(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end());
}

int OuterCycleProfile::sum() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

bool OuterCycleProfile::contains(int length) const {
  return std::binary_search(lengths_.begin(), lengths_.end(), length);
}

OuterCycleProfile OuterCycleProfile::without(int length) const {
  auto it = std::find(lengths_.begin(), lengths_.end(), length);
  if (it == lengths_.end()) {
    throw Error(ErrorCode::ElementAbsent, std::to_string(length) + " not in " + to_string());
  }
  std::vector<int> rest = lengths_;
  rest.erase(rest.begin() + (it - lengths_.begin()));
  return OuterCycleProfile(std::move(rest));
}

OuterCycleProfile OuterCycleProfile::with(int length) const {
  std::vector<int> more = lengths_;
  more.push_back(length);
  return OuterCycleProfile(std::move(more));
}

OuterCycleProfile OuterCycleProfile::merged(const OuterCycleProfile& other) const {
  std::vector<int> all = lengths_;
  all.insert(all.end(), other.lengths_.begin(), other.lengths_.end());
  return OuterCycleProfile(std::move(all));
}

std::string OuterCycleProfile::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  return out + "}";
}

std::optional<std::string> hist_violation(const CubicGraph& g, const EdgeSubset& tree_edges) {
  const int n = g.order();
  if (static_cast<int>(tree_edges.size()) != g.size()) return "edge set sized for a different graph";
  if (static_cast<int>(tree_edges.count()) != n - 1) {
    return "tree has " + std::to_string(tree_edges.count()) + " edges, expected " + std::to_string(n - 1);
  }
  std::vector<int> degree(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto i = tree_edges.find_first(); i != EdgeSubset::npos; i = tree_edges.find_next(i)) {
    const Edge& e = g.edge(static_cast<int>(i));
    ++degree[e.u];
    ++degree[e.v];
    int a = find(e.u), b = find(e.v);
    if (a == b) return "tree edges contain a cycle";
    parent[a] = b;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 2) return "vertex " + std::to_string(v) + " has tree degree 2";
    if (degree[v] == 0) return "vertex " + std::to_string(v) + " is not spanned";
  }
  return std::nullopt;
}

Hist hist_from_internal(const CubicGraph& g, const VertexSubset& internal) {
  Hist h{g.edge_subset()};
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (internal.test(e.u) || internal.test(e.v)) h.tree_edges.set(i);
  }
  return h;
}

Hist hist_from_outer_cycles(const CubicGraph& g, const std::vector<EdgeSubset>& cycles) {
  EdgeSubset outer = g.edge_subset();
  for (const auto& c : cycles) outer |= c;
  Hist h{~outer};
  if (auto why = hist_violation(g, h.tree_edges)) {
    throw Error(ErrorCode::NotAHist, "complement of the outer cycles is not a Hist: " + *why);
  }
  return h;
}

OuterCycles outer_cycles(const CubicGraph& g, const Hist& hist) {
  if (auto why = hist_violation(g, hist.tree_edges)) throw Error(ErrorCode::NotAHist, *why);
  OuterCycles out;
  const int n = g.order();
  std::vector<char> visited(n, 0);
  auto cycle_neighbors = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (int k = 0; k < 3; ++k) {
      if (!hist.tree_edges.test(g.incident(v)[k])) nb.push_back(g.neighbors(v)[k]);
    }
    return nb;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (visited[s]) continue;
    auto nb = cycle_neighbors(s);
    if (nb.empty()) continue;  // internal vertex
    // Leaves carry exactly two non-tree edges, so they trace disjoint cycles.
    std::vector<Vertex> cycle{s};
    EdgeSubset edges = g.edge_subset();
    visited[s] = 1;
    Vertex prev = s;
    Vertex cur = std::min(nb[0], nb[1]);
    edges.set(g.require_edge(s, cur));
    while (cur != s) {
      visited[cur] = 1;
      cycle.push_back(cur);
      auto next = cycle_neighbors(cur);
      Vertex step = next[0] == prev ? next[1] : next[0];
      edges.set(g.require_edge(cur, step));
      prev = cur;
      cur = step;
    }
    out.profile = out.profile.with(static_cast<int>(cycle.size()));
    out.vertices.push_back(std::move(cycle));
    out.edges.push_back(std::move(edges));
  }
  return out;
}

namespace {

enum class Status : char { Undecided, Internal, Leaf };

// Searches vertex sets I inducing a tree such that every vertex outside I has
// exactly one neighbour in I; the edges touching I then form a Hist and
// |I| = n/2 - 1. I is grown as a connected set from a root.
class HistSearch {
 public:
  HistSearch(const CubicGraph& g, std::size_t limit) : g_(g), limit_(limit) {
    const int n = g.order();
    target_ = (n - 2) / 2;
    status_.assign(n, Status::Undecided);
    inside_.assign(n, 0);
  }

  std::vector<Hist> run() {
    const int n = g_.order();
    if (n < 4 || n % 2) return {};
    // Either vertex 0 is internal, or it is a leaf hanging off exactly one of
    // its neighbours. The cases are disjoint, so no Hist is found twice.
    attempt([&] { return make_internal(0); });
    for (int k = 0; k < 3 && found_.size() < limit_; ++k) {
      attempt([&] {
        if (!make_internal(g_.neighbors(0)[k])) return false;
        return make_leaf(0);
      });
    }
    return std::move(found_);
  }

 private:
  struct Snapshot {
    std::vector<Status> status;
    std::vector<int> inside;
    int internal;
    int leaves;
  };

  Snapshot save() const { return {status_, inside_, internal_, leaves_}; }
  void restore(Snapshot s) {
    status_ = std::move(s.status);
    inside_ = std::move(s.inside);
    internal_ = s.internal;
    leaves_ = s.leaves;
  }

  template <class F>
  void attempt(F&& setup) {
    Snapshot s = save();
    if (setup()) grow();
    restore(std::move(s));
  }

  int undecided_neighbors(Vertex v) const {
    int count = 0;
    for (Vertex w : g_.neighbors(v)) count += status_[w] == Status::Undecided;
    return count;
  }

  // A leaf with its internal neighbour fixed: every other neighbour is a leaf.
  bool close_leaf(Vertex v) {
    for (Vertex w : g_.neighbors(v)) {
      if (status_[w] == Status::Undecided && !make_leaf(w)) return false;
    }
    return true;
  }

  bool make_internal(Vertex v) {
    if (status_[v] != Status::Undecided) return status_[v] == Status::Internal;
    if (internal_ > 0 && inside_[v] != 1) return false;
    status_[v] = Status::Internal;
    if (++internal_ > target_) return false;
    // Count v for every neighbour before propagating, so no leaf is judged
    // against a half-updated state.
    for (Vertex w : g_.neighbors(v)) ++inside_[w];
    for (Vertex w : g_.neighbors(v)) {
      if (status_[w] == Status::Internal) continue;
      if (inside_[w] > 1) return false;
      if (status_[w] == Status::Leaf && !close_leaf(w)) return false;
    }
    return true;
  }

  bool make_leaf(Vertex v) {
    if (status_[v] != Status::Undecided) return status_[v] == Status::Leaf;
    if (inside_[v] > 1) return false;
    status_[v] = Status::Leaf;
    if (++leaves_ > g_.order() - target_) return false;
    if (inside_[v] == 1) {
      if (!close_leaf(v)) return false;
    } else if (undecided_neighbors(v) == 0) {
      return false;
    }
    // Leaf neighbours still waiting for their internal vertex lost an option.
    for (Vertex w : g_.neighbors(v)) {
      if (status_[w] == Status::Leaf && inside_[w] == 0 && undecided_neighbors(w) == 0) return false;
    }
    return true;
  }

  void grow() {
    if (found_.size() >= limit_) return;
    if (internal_ == target_) {
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (status_[v] != Status::Internal && inside_[v] != 1) return;
      }
      VertexSubset internal = g_.vertex_subset();
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (status_[v] == Status::Internal) internal.set(v);
      }
      found_.push_back(hist_from_internal(g_, internal));
      return;
    }
    Vertex pick = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (status_[v] == Status::Undecided && inside_[v] >= 1) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return;
    attempt([&] { return make_internal(pick); });
    if (found_.size() >= limit_) return;
    attempt([&] { return make_leaf(pick); });
  }

  const CubicGraph& g_;
  std::size_t limit_;
  int target_ = 0;
  std::vector<Status> status_;
  std::vector<int> inside_;
  int internal_ = 0;
  int leaves_ = 0;
  std::vector<Hist> found_;
};

void check_cap(const CubicGraph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw Error(ErrorCode::SizeCapExceeded,
                std::string(what) + " limited to " + std::to_string(cap) + " vertices");
  }
}

}  // namespace

std::optional<Hist> find_hist(const CubicGraph& g, const HistSearchOptions& options) {
  auto found = enumerate_hists(g, 1, options);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<Hist> enumerate_hists(const CubicGraph& g, std::size_t limit, const HistSearchOptions& options) {
  check_cap(g, options.max_vertices, "Hist search");
  if (limit == 0) throw Error(ErrorCode::InvalidArgument, "limit must be at least 1");
  return HistSearch(g, limit).run();
}

std::vector<EdgeSubset> all_cycles(const CubicGraph& g) {
  std::vector<EdgeSubset> out;
  const int n = g.order();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  EdgeSubset edges = g.edge_subset();
  // Each circuit is reported once: from its smallest vertex s, in the
  // direction whose second vertex is smaller than its last.
  for (Vertex s = 0; s < n; ++s) {
    auto extend = [&](auto&& self, Vertex v) -> void {
      for (int k = 0; k < 3; ++k) {
        Vertex w = g.neighbors(v)[k];
        int e = g.incident(v)[k];
        if (w == s && path.size() >= 3 && path[1] < v) {
          edges.set(e);
          out.push_back(edges);
          edges.reset(e);
          continue;
        }
        if (w <= s || on_path[w]) continue;
        on_path[w] = 1;
        path.push_back(w);
        edges.set(e);
        self(self, w);
        edges.reset(e);
        path.pop_back();
        on_path[w] = 0;
      }
    };
    on_path[s] = 1;
    path.assign(1, s);
    extend(extend, s);
    on_path[s] = 0;
  }
  return out;
}

namespace {

class CdcSearch {
 public:
  CdcSearch(const CubicGraph& g, std::vector<EdgeSubset> candidates, std::vector<int> need)
      : g_(g), candidates_(std::move(candidates)), need_(std::move(need)), used_(candidates_.size(), 0) {
    by_edge_.resize(g.size());
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      const auto& cyc = candidates_[c];
      for (auto e = cyc.find_first(); e != EdgeSubset::npos; e = cyc.find_next(e)) by_edge_[e].push_back(c);
    }
  }

  bool run() { return search(); }
  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool fits(std::size_t c) const {
    const auto& cyc = candidates_[c];
    for (auto e = cyc.find_first(); e != EdgeSubset::npos; e = cyc.find_next(e)) {
      if (need_[e] == 0) return false;
    }
    return true;
  }

  void apply(std::size_t c, int delta) {
    const auto& cyc = candidates_[c];
    for (auto e = cyc.find_first(); e != EdgeSubset::npos; e = cyc.find_next(e)) need_[e] += delta;
  }

  bool search() {
    // Branch on the open edge with the fewest fitting cycles.
    int best_edge = -1;
    std::vector<std::size_t> best_options;
    for (int e = 0; e < g_.size(); ++e) {
      if (need_[e] == 0) continue;
      std::vector<std::size_t> options;
      for (std::size_t c : by_edge_[e]) {
        if (!used_[c] && fits(c)) options.push_back(c);
      }
      if (static_cast<int>(options.size()) < need_[e]) return false;
      if (best_edge < 0 || options.size() < best_options.size()) {
        best_edge = e;
        best_options = std::move(options);
      }
    }
    if (best_edge < 0) return true;
    for (std::size_t c : best_options) {
      if (!fits(c)) continue;
      used_[c] = 1;
      apply(c, -1);
      chosen_.push_back(c);
      if (search()) return true;
      chosen_.pop_back();
      apply(c, +1);
      used_[c] = 0;
    }
    return false;
  }

  const CubicGraph& g_;
  std::vector<EdgeSubset> candidates_;
  std::vector<int> need_;
  std::vector<char> used_;
  std::vector<std::vector<std::size_t>> by_edge_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<std::vector<EdgeSubset>> cdc_with_outer_cycles(const CubicGraph& g, const Hist& hist,
                                                             const CdcOptions& options) {
  check_cap(g, options.max_vertices, "cycle double cover search");
  const auto outer = outer_cycles(g, hist);
  std::vector<int> need(g.size(), 2);
  for (const auto& c : outer.edges) {
    for (auto e = c.find_first(); e != EdgeSubset::npos; e = c.find_next(e)) --need[e];
  }
  std::vector<EdgeSubset> candidates;
  for (auto& c : all_cycles(g)) {
    if (std::find(outer.edges.begin(), outer.edges.end(), c) == outer.edges.end()) candidates.push_back(std::move(c));
  }
  CdcSearch search(g, candidates, need);
  if (!search.run()) return std::nullopt;
  std::vector<EdgeSubset> cover = outer.edges;
  for (std::size_t c : search.chosen()) cover.push_back(candidates[c]);
  return cover;
}

}  // namespace snarklab

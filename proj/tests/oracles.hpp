#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond the CubicGraph container, and are only meant for small inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "snarklab/graph.hpp"

namespace oracle {

using snarklab::CubicGraph;
using snarklab::Edge;

// Shortest cycle through each edge uv: BFS from u to v without using uv.
inline int girth(const CubicGraph& g) {
  int best = 1 << 30;
  for (const Edge& e : g.edges()) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[e.u] = 0;
    q.push(e.u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if ((x == e.u && y == e.v) || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
    if (dist[e.v] > 0) best = std::min(best, dist[e.v] + 1);
  }
  return best;
}

// Does the subgraph induced by the vertices flagged in `in` contain a cycle?
// Repeatedly strips vertices of induced degree < 2.
inline bool induced_has_cycle(const CubicGraph& g, std::vector<char> in) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!in[v]) continue;
      int d = 0;
      for (int w : g.neighbors(v)) d += in[w];
      if (d < 2) {
        in[v] = 0;
        changed = true;
      }
    }
  }
  return std::any_of(in.begin(), in.end(), [](char c) { return c != 0; });
}

// Exhaustive over vertex bipartitions (vertex 0 fixed on one side): is there a
// cut of fewer than k edges with a cycle on both sides? Feasible for n <= 22.
inline bool cyclically_k_edge_connected(const CubicGraph& g, int k) {
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::vector<char> side(n, 0), other(n, 0);
    side[0] = 1;
    for (int v = 1; v < n; ++v) side[v] = (mask >> (v - 1)) & 1 ? 0 : 1;
    int cut = 0;
    for (const Edge& e : g.edges()) cut += side[e.u] != side[e.v];
    if (cut >= k) continue;
    for (int v = 0; v < n; ++v) other[v] = !side[v];
    if (induced_has_cycle(g, side) && induced_has_cycle(g, other)) return false;
  }
  return true;
}

// Edges in index order, colors 1..3, reject as soon as two edges at a vertex
// clash. First edge fixed to color 1.
inline bool three_edge_colorable(const CubicGraph& g) {
  const int m = g.size();
  std::vector<int> color(m, 0);
  std::function<bool(int)> go = [&](int i) {
    if (i == m) return true;
    const Edge& e = g.edge(i);
    for (int c = 1; c <= 3; ++c) {
      if (i == 0 && c > 1) break;
      bool clash = false;
      for (int x : {e.u, e.v}) {
        for (int f : g.incident(x)) {
          if (f != i && color[f] == c) clash = true;
        }
      }
      if (clash) continue;
      color[i] = c;
      if (go(i + 1)) return true;
      color[i] = 0;
    }
    return false;
  };
  return go(0);
}

// Is `tree` (edge indices) a spanning tree with every degree 1 or 3?
inline bool is_hist(const CubicGraph& g, const std::vector<int>& tree) {
  const int n = g.order();
  if (static_cast<int>(tree.size()) != n - 1) return false;
  std::vector<int> parent(n), deg(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i : tree) {
    const Edge& e = g.edge(i);
    ++deg[e.u];
    ++deg[e.v];
    int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1 || d == 3; });
}

// Number of Hists, over every (n-1)-subset of the edges.
inline int count_hists(const CubicGraph& g, int stop_at = 1 << 30) {
  const int m = g.size();
  const int r = g.order() - 1;
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  int count = 0;
  while (count < stop_at) {
    if (is_hist(g, pick)) ++count;
    int i = r - 1;
    while (i >= 0 && pick[i] == m - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

inline bool has_hist(const CubicGraph& g) { return count_hists(g, 1) > 0; }

// Sorted component sizes of the graph formed by the non-tree edges, counting
// only components that contain at least one edge.
inline std::vector<int> profile(const CubicGraph& g, const std::vector<int>& tree) {
  std::vector<char> in_tree(g.size(), 0);
  for (int i : tree) in_tree[i] = 1;
  std::map<int, std::vector<int>> adj;
  for (int i = 0; i < g.size(); ++i) {
    if (in_tree[i]) continue;
    adj[g.edge(i).u].push_back(g.edge(i).v);
    adj[g.edge(i).v].push_back(g.edge(i).u);
  }
  std::set<int> seen;
  std::vector<int> sizes;
  for (const auto& [start, _] : adj) {
    if (seen.count(start)) continue;
    int size = 0;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++size;
      for (int y : adj[x]) {
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Random connected simple cubic graph by the pairing model with rejection.
inline CubicGraph random_cubic(int n, std::mt19937& rng) {
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), {v, v, v});
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      int a = std::min(points[i], points[i + 1]);
      int b = std::max(points[i], points[i + 1]);
      if (a == b || !edges.insert({a, b}).second) ok = false;
    }
    if (!ok) continue;
    std::vector<Edge> list;
    for (auto [a, b] : edges) list.push_back(Edge{a, b});
    CubicGraph g = CubicGraph::from_edges(n, list);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count == n) return g;
  }
}

}  // namespace oracle

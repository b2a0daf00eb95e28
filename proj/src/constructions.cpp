#include "snarklab/constructions.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "json.hpp"

#include "snarklab/error.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/formats.hpp"

namespace snarklab {

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

std::pair<Vertex, Vertex> others_sorted(const CubicGraph& g, Vertex v, Vertex skip) {
  std::vector<Vertex> rest;
  for (Vertex w : g.neighbors(v)) {
    if (w != skip) rest.push_back(w);
  }
  if (rest.size() != 2) throw Error(ErrorCode::InvalidAnchors, vtx(skip) + " is not a neighbor of " + vtx(v));
  return {rest[0], rest[1]};
}

bool same_pair(Vertex p, Vertex q, std::pair<Vertex, Vertex> expected) {
  return (p == expected.first && q == expected.second) || (p == expected.second && q == expected.first);
}

}  // namespace

Vertex NewVertexLedger::at(std::string_view role) const {
  for (const auto& [name, id] : roles) {
    if (name == role) return id;
  }
  throw Error(ErrorCode::InvalidArgument, "no new vertex with role " + std::string(role));
}

DotAnchors complete_anchors(const CubicGraph& h, Vertex a1, Vertex b1, Vertex a2, Vertex b2, Vertex a3, Vertex b3) {
  auto [x1, y1] = others_sorted(h, a3, b3);
  auto [x2, y2] = others_sorted(h, b3, a3);
  return DotAnchors{a1, b1, a2, b2, a3, b3, x1, y1, x2, y2};
}

void validate_anchors(const CubicGraph& g, const CubicGraph& h, const DotAnchors& an) {
  auto in_g = [&](Vertex v) { return v >= 0 && v < g.order(); };
  auto in_h = [&](Vertex v) { return v >= 0 && v < h.order(); };
  if (!in_g(an.a1) || !in_g(an.b1) || !in_g(an.a2) || !in_g(an.b2)) {
    throw Error(ErrorCode::InvalidAnchors, "G anchor out of range");
  }
  if (!in_h(an.a3) || !in_h(an.b3)) throw Error(ErrorCode::InvalidAnchors, "H anchor out of range");
  if (!g.adjacent(an.a1, an.b1)) throw Error(ErrorCode::InvalidAnchors, "e1 is not an edge of G");
  if (!g.adjacent(an.a2, an.b2)) throw Error(ErrorCode::InvalidAnchors, "e2 is not an edge of G");
  if (Edge::of(an.a1, an.b1).shares_endpoint(Edge::of(an.a2, an.b2))) {
    throw Error(ErrorCode::InvalidAnchors, "e1 and e2 share an endpoint");
  }
  if (!h.adjacent(an.a3, an.b3)) throw Error(ErrorCode::InvalidAnchors, "e3 is not an edge of H");
  if (!same_pair(an.x1, an.y1, others_sorted(h, an.a3, an.b3))) {
    throw Error(ErrorCode::InvalidAnchors, "{x1,y1} must equal N(a3) - b3");
  }
  if (!same_pair(an.x2, an.y2, others_sorted(h, an.b3, an.a3))) {
    throw Error(ErrorCode::InvalidAnchors, "{x2,y2} must equal N(b3) - a3");
  }
}

void validate_anchors(const CubicGraph& g, const CubicGraph& h, const TriangleAnchors& an) {
  validate_anchors(g, h, an.dot);
  if (an.c == an.d || !same_pair(an.c, an.d, others_sorted(g, an.dot.b1, an.dot.a1))) {
    throw Error(ErrorCode::InvalidAnchors, "{c,d} must be the two other neighbors of b1");
  }
}

namespace {

struct Assembly {
  int g_order;
  int base;  // first new vertex id
  std::vector<Vertex> h_map;
  std::vector<Edge> edges;
};

// G minus `cut` plus H minus {a3, b3}, with H renumbered after G.
Assembly start(const CubicGraph& g, const CubicGraph& h, Vertex a3, Vertex b3, const std::vector<Edge>& cut) {
  Assembly a{g.order(), g.order() + h.order() - 2, std::vector<Vertex>(h.order(), -1), {}};
  for (const Edge& e : g.edges()) {
    if (std::find(cut.begin(), cut.end(), e) == cut.end()) a.edges.push_back(e);
  }
  Vertex next = g.order();
  for (Vertex v = 0; v < h.order(); ++v) {
    if (v != a3 && v != b3) a.h_map[v] = next++;
  }
  for (const Edge& e : h.edges()) {
    if (e.touches(a3) || e.touches(b3)) continue;
    a.edges.push_back(Edge::of(a.h_map[e.u], a.h_map[e.v]));
  }
  return a;
}

SurgeryResult finish(Assembly a, NewVertexLedger ledger) {
  const int n = a.base + static_cast<int>(ledger.roles.size());
  return SurgeryResult{CubicGraph::from_edges(n, a.edges), std::move(a.h_map), std::move(ledger)};
}

}  // namespace

SurgeryResult dot_product(const CubicGraph& g, const CubicGraph& h, const DotAnchors& an) {
  validate_anchors(g, h, an);
  Assembly a = start(g, h, an.a3, an.b3, {Edge::of(an.a1, an.b1), Edge::of(an.a2, an.b2)});
  const auto& m = a.h_map;
  a.edges.push_back(Edge::of(an.a1, m[an.x1]));
  a.edges.push_back(Edge::of(an.b1, m[an.y1]));
  a.edges.push_back(Edge::of(an.a2, m[an.x2]));
  a.edges.push_back(Edge::of(an.b2, m[an.y2]));
  return finish(std::move(a), {});
}

SurgeryResult bullet(const CubicGraph& g, const CubicGraph& h, const DotAnchors& an, BulletVariant variant) {
  validate_anchors(g, h, an);
  Assembly a = start(g, h, an.a3, an.b3, {Edge::of(an.a1, an.b1), Edge::of(an.a2, an.b2)});
  const auto& m = a.h_map;
  NewVertexLedger ledger;
  Vertex next = a.base;
  // Side i either joins a_i x_i and b_i y_i directly, or through the path
  // a_i h_i j_i b_i with h_i x_i and j_i y_i.
  auto join = [&](bool subdivide, Vertex ai, Vertex bi, Vertex xi, Vertex yi, const char* h_role,
                  const char* j_role) {
    if (!subdivide) {
      a.edges.push_back(Edge::of(ai, m[xi]));
      a.edges.push_back(Edge::of(bi, m[yi]));
      return;
    }
    const Vertex hv = next++;
    const Vertex jv = next++;
    ledger.roles.emplace_back(h_role, hv);
    ledger.roles.emplace_back(j_role, jv);
    a.edges.insert(a.edges.end(), {Edge::of(ai, hv), Edge::of(hv, jv), Edge::of(jv, bi),
                                   Edge::of(hv, m[xi]), Edge::of(jv, m[yi])});
  };
  join(variant != BulletVariant::B2, an.a1, an.b1, an.x1, an.y1, "h1", "j1");
  join(variant != BulletVariant::B1, an.a2, an.b2, an.x2, an.y2, "h2", "j2");
  return finish(std::move(a), std::move(ledger));
}

SurgeryResult triangle(const CubicGraph& g, const CubicGraph& h, const TriangleAnchors& an) {
  validate_anchors(g, h, an);
  const DotAnchors& d = an.dot;
  Assembly a = start(g, h, d.a3, d.b3, {Edge::of(d.a1, d.b1), Edge::of(d.a2, d.b2), Edge::of(d.b1, an.c)});
  const auto& m = a.h_map;
  const Vertex q1 = a.base;
  const Vertex q2 = a.base + 1;
  a.edges.insert(a.edges.end(), {Edge::of(d.a1, q1), Edge::of(q1, d.b1), Edge::of(d.b1, q2), Edge::of(q2, an.c),
                                 Edge::of(q1, m[d.x1]), Edge::of(q2, m[d.y1]), Edge::of(d.a2, m[d.x2]),
                                 Edge::of(d.b2, m[d.y2])});
  return finish(std::move(a), NewVertexLedger{{{"q1", q1}, {"q2", q2}}});
}

std::string graph_hash(const CubicGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : emit_graph6(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using nlohmann::ordered_json;

ordered_json pairs_to_json(const std::vector<std::pair<std::string, int>>& pairs) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : pairs) out[k] = v;
  return out;
}

std::vector<std::pair<std::string, int>> pairs_from_json(const ordered_json& j) {
  std::vector<std::pair<std::string, int>> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), it.value().get<int>());
  return out;
}

ordered_json to_json(const Provenance& p) {
  ordered_json j;
  j["construction"] = p.construction;
  if (!p.fixture.empty()) j["fixture"] = p.fixture;
  j["order"] = p.order;
  j["graph_hash"] = p.graph_hash;
  j["profile"] = p.profile.lengths();
  if (!p.parameters.empty()) j["parameters"] = pairs_to_json(p.parameters);
  if (!p.anchors.empty()) j["anchors"] = pairs_to_json(p.anchors);
  if (!p.new_vertices.empty()) j["new_vertices"] = pairs_to_json(p.new_vertices);
  if (!p.inputs.empty()) {
    j["inputs"] = ordered_json::array();
    for (const auto& in : p.inputs) j["inputs"].push_back(to_json(in));
  }
  return j;
}

Provenance from_json(const ordered_json& j) {
  Provenance p;
  p.construction = j.at("construction").get<std::string>();
  p.fixture = j.value("fixture", std::string{});
  p.order = j.at("order").get<int>();
  p.graph_hash = j.at("graph_hash").get<std::string>();
  p.profile = OuterCycleProfile(j.at("profile").get<std::vector<int>>());
  if (j.contains("parameters")) p.parameters = pairs_from_json(j["parameters"]);
  if (j.contains("anchors")) p.anchors = pairs_from_json(j["anchors"]);
  if (j.contains("new_vertices")) p.new_vertices = pairs_from_json(j["new_vertices"]);
  if (j.contains("inputs")) {
    for (const auto& in : j["inputs"]) p.inputs.push_back(from_json(in));
  }
  return p;
}

}  // namespace

std::string provenance_to_json(const Provenance& p, int indent) { return to_json(p).dump(indent); }

Provenance provenance_from_json(std::string_view text) {
  try {
    return from_json(ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("provenance JSON: ") + e.what());
  }
}

ConstructedHistSnark wrap_hist_snark(std::string name, CubicGraph graph, Hist hist) {
  auto oc = outer_cycles(graph, hist);
  Provenance p;
  p.construction = "fixture";
  p.fixture = std::move(name);
  p.order = graph.order();
  p.graph_hash = graph_hash(graph);
  p.profile = oc.profile;
  return ConstructedHistSnark{std::move(graph), std::move(hist), oc.profile, std::move(p)};
}

namespace {

// Everything one anchor attempt needs to turn a surgery into a Hist-snark.
struct Attempt {
  SurgeryResult surgery;
  const CubicGraph* g;
  const EdgeSubset* g_tree;
  std::vector<Edge> g_drop;          // G tree edges not carried over
  const CubicGraph* h;
  std::vector<Edge> h_tree;          // H-side edges to carry (H ids)
  std::vector<Edge> added;           // output ids
};

Hist assemble_hist(const Attempt& at) {
  const CubicGraph& out = at.surgery.graph;
  Hist hist{out.edge_subset()};
  for (auto i = at.g_tree->find_first(); i != EdgeSubset::npos; i = at.g_tree->find_next(i)) {
    const Edge& e = at.g->edge(static_cast<int>(i));
    if (std::find(at.g_drop.begin(), at.g_drop.end(), e) != at.g_drop.end()) continue;
    hist.tree_edges.set(out.require_edge(e.u, e.v));
  }
  const auto& m = at.surgery.h_map;
  for (const Edge& e : at.h_tree) {
    if (m[e.u] < 0 || m[e.v] < 0) continue;
    hist.tree_edges.set(out.require_edge(m[e.u], m[e.v]));
  }
  for (const Edge& e : at.added) hist.tree_edges.set(out.require_edge(e.u, e.v));
  return hist;
}

// Nullopt-with-reason style: returns an empty string when verified.
std::string verify(const CubicGraph& graph, const Hist& hist, const OuterCycleProfile& expected,
                   const ConstructionOptions& options) {
  if (auto why = hist_violation(graph, hist.tree_edges)) return "assembled tree is not a Hist: " + *why;
  auto oc = outer_cycles(graph, hist);
  if (oc.profile != expected) {
    return "profile " + oc.profile.to_string() + " differs from expected " + expected.to_string();
  }
  if (options.verify_snark_structure) {
    if (int gi = girth(graph); gi < 5) return "girth " + std::to_string(gi) + " below 5";
    if (!cyclic_edge_connectivity_at_least(graph, 4).holds) return "not cyclically 4-edge-connected";
  }
  if (options.verify_colorability && is_three_edge_colorable(graph, options.limits)) {
    return "output is 3-edge-colorable";
  }
  return {};
}

std::vector<std::pair<std::string, Vertex>> anchor_roles(const DotAnchors& a) {
  return {{"a1", a.a1}, {"b1", a.b1}, {"a2", a.a2}, {"b2", a.b2}, {"a3", a.a3},
          {"b3", a.b3}, {"x1", a.x1}, {"y1", a.y1}, {"x2", a.x2}, {"y2", a.y2}};
}

// Runs candidate attempts in order and keeps the first that verifies.
class AnchorSearch {
 public:
  AnchorSearch(std::string name, OuterCycleProfile expected, const ConstructionOptions& options)
      : name_(std::move(name)), expected_(std::move(expected)), options_(options) {}

  // Returns true once a candidate has succeeded.
  bool offer(Attempt attempt, std::vector<std::pair<std::string, Vertex>> roles,
             std::vector<std::pair<std::string, int>> parameters,
             std::vector<const Provenance*> inputs) {
    ++tried_;
    Hist hist = assemble_hist(attempt);
    std::string why = verify(attempt.surgery.graph, hist, expected_, options_);
    if (!why.empty()) {
      last_failure_ = std::move(why);
      return false;
    }
    Provenance p;
    p.construction = name_;
    p.order = attempt.surgery.graph.order();
    p.graph_hash = graph_hash(attempt.surgery.graph);
    p.profile = expected_;
    p.parameters = std::move(parameters);
    p.anchors = std::move(roles);
    p.new_vertices = attempt.surgery.ledger.roles;
    for (const Provenance* in : inputs) p.inputs.push_back(*in);
    result_ = ConstructedHistSnark{std::move(attempt.surgery.graph), std::move(hist), expected_, std::move(p)};
    return true;
  }

  ConstructedHistSnark take() {
    if (result_) return std::move(*result_);
    if (tried_ == 0) throw Error(ErrorCode::NoValidAnchors, name_ + ": no anchor choice satisfies the preconditions");
    throw Error(ErrorCode::VerificationFailed,
                name_ + ": all " + std::to_string(tried_) + " anchor choices failed; last: " + last_failure_);
  }

 private:
  std::string name_;
  OuterCycleProfile expected_;
  const ConstructionOptions& options_;
  std::optional<ConstructedHistSnark> result_;
  std::size_t tried_ = 0;
  std::string last_failure_;
};

std::vector<int> tree_edge_indices(const Hist& h) {
  std::vector<int> out;
  for (auto i = h.tree_edges.find_first(); i != EdgeSubset::npos; i = h.tree_edges.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> tree_degrees(const CubicGraph& g, const Hist& h) {
  std::vector<int> deg(g.order(), 0);
  for (int i : tree_edge_indices(h)) {
    ++deg[g.edge(i).u];
    ++deg[g.edge(i).v];
  }
  return deg;
}

// Edge indices lying on outer cycles of the given length, in index order.
std::vector<int> outer_edges_of_length(const CubicGraph& g, const Hist& h, int length) {
  std::vector<int> out;
  auto oc = outer_cycles(g, h);
  for (std::size_t c = 0; c < oc.edges.size(); ++c) {
    if (static_cast<int>(oc.vertices[c].size()) != length) continue;
    for (auto e = oc.edges[c].find_first(); e != EdgeSubset::npos; e = oc.edges[c].find_next(e)) {
      out.push_back(static_cast<int>(e));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_element(const OuterCycleProfile& p, int k) {
  if (!p.contains(k)) throw Error(ErrorCode::ElementAbsent, std::to_string(k) + " not in " + p.to_string());
}

}  // namespace

ConstructedHistSnark union_disjoint(const ConstructedHistSnark& g, const ConstructedHistSnark& h,
                                    const ConstructionOptions& options) {
  AnchorSearch search("union_disjoint", g.profile.merged(h.profile), options);
  const auto g_tree = tree_edge_indices(g.hist);
  const auto h_deg = tree_degrees(h.graph, h.hist);
  const auto h_tree = edges_of(h.graph, h.hist.tree_edges);
  // e3 needs all four adjacent edges in T_H, i.e. both ends internal.
  for (const Edge& e3 : h_tree) {
    if (h_deg[e3.u] != 3 || h_deg[e3.v] != 3) continue;
    for (std::size_t i = 0; i < g_tree.size(); ++i) {
      for (std::size_t j = i + 1; j < g_tree.size(); ++j) {
        const Edge e1 = g.graph.edge(g_tree[i]);
        const Edge e2 = g.graph.edge(g_tree[j]);
        if (e1.shares_endpoint(e2)) continue;
        const DotAnchors an = complete_anchors(h.graph, e1.u, e1.v, e2.u, e2.v, e3.u, e3.v);
        Attempt at{bullet(g.graph, h.graph, an, BulletVariant::B3), &g.graph, &g.hist.tree_edges, {e1, e2},
                   &h.graph, h_tree, {}};
        const auto& L = at.surgery.ledger;
        const auto& m = at.surgery.h_map;
        const Vertex h1 = L.at("h1"), j1 = L.at("j1"), h2 = L.at("h2"), j2 = L.at("j2");
        at.added = {Edge::of(an.a1, h1), Edge::of(h1, j1),      Edge::of(j1, an.b1),      Edge::of(an.a2, h2),
                    Edge::of(h2, j2),    Edge::of(j2, an.b2),   Edge::of(h1, m[an.x1]),   Edge::of(j1, m[an.y1]),
                    Edge::of(h2, m[an.x2]), Edge::of(j2, m[an.y2])};
        if (search.offer(std::move(at), anchor_roles(an), {}, {&g.provenance, &h.provenance})) return search.take();
      }
    }
  }
  return search.take();
}

ConstructedHistSnark union_merge(const ConstructedHistSnark& g, int k, const ConstructedHistSnark& h, int l,
                                 const ConstructionOptions& options) {
  require_element(g.profile, k);
  require_element(h.profile, l);
  OuterCycleProfile expected = g.profile.without(k).merged(h.profile.without(l)).with(k + l - 1);
  AnchorSearch search("union_merge", expected, options);

  const auto g_deg = tree_degrees(g.graph, g.hist);
  const auto g_tree = tree_edge_indices(g.hist);
  const auto h_deg = tree_degrees(h.graph, h.hist);
  const auto h_tree = edges_of(h.graph, h.hist.tree_edges);

  // b3: a leaf on a length-l outer cycle; its tree neighbour a3 is internal.
  std::vector<Vertex> b3_choices;
  for (int e : outer_edges_of_length(h.graph, h.hist, l)) {
    for (Vertex v : {h.graph.edge(e).u, h.graph.edge(e).v}) {
      if (std::find(b3_choices.begin(), b3_choices.end(), v) == b3_choices.end()) b3_choices.push_back(v);
    }
  }
  std::sort(b3_choices.begin(), b3_choices.end());

  for (int e2_index : outer_edges_of_length(g.graph, g.hist, k)) {
    const Edge e2 = g.graph.edge(e2_index);
    for (int e1_index : g_tree) {
      const Edge e1 = g.graph.edge(e1_index);
      if (e1.shares_endpoint(e2)) continue;
      for (auto [a1, b1] : {std::pair{e1.u, e1.v}, std::pair{e1.v, e1.u}}) {
        if (g_deg[b1] != 3) continue;  // b1c must also be a tree edge
        auto [c_lo, c_hi] = others_sorted(g.graph, b1, a1);
        for (auto [c, d] : {std::pair{c_lo, c_hi}, std::pair{c_hi, c_lo}}) {
          for (Vertex b3 : b3_choices) {
            Vertex a3 = -1;
            for (int i = 0; i < 3; ++i) {
              if (h.hist.tree_edges.test(h.graph.incident(b3)[i])) a3 = h.graph.neighbors(b3)[i];
            }
            if (a3 < 0 || h_deg[a3] != 3) continue;
            TriangleAnchors an{complete_anchors(h.graph, a1, b1, e2.u, e2.v, a3, b3), c, d};
            Attempt at{triangle(g.graph, h.graph, an), &g.graph, &g.hist.tree_edges, {e1, Edge::of(b1, c)},
                       &h.graph, h_tree, {}};
            const auto& L = at.surgery.ledger;
            const auto& m = at.surgery.h_map;
            const Vertex q1 = L.at("q1"), q2 = L.at("q2");
            at.added = {Edge::of(a1, q1), Edge::of(q1, b1), Edge::of(b1, q2),
                        Edge::of(q2, c),  Edge::of(q1, m[an.dot.x1]), Edge::of(q2, m[an.dot.y1])};
            auto roles = anchor_roles(an.dot);
            roles.emplace_back("c", c);
            roles.emplace_back("d", d);
            if (search.offer(std::move(at), std::move(roles), {{"k", k}, {"l", l}}, {&g.provenance, &h.provenance})) {
              return search.take();
            }
          }
        }
      }
    }
  }
  return search.take();
}

const PetersenRoles& petersen_roles() {
  static const PetersenRoles roles = [] {
    PetersenRoles r;
    r.inner_cycle = {5, 7, 9, 6, 8};
    r.a3 = 0;
    r.b3 = 5;
    r.outer_cycle = {0, 1, 2, 3, 4};
    r.bullet_roles = DotAnchors{0, 0, 0, 0, 0, 1, 4, 5, 2, 6};

    const CubicGraph& p = fixture("P10").graph;
    auto fail = [](const std::string& why) { throw Error(ErrorCode::FixtureCorrupt, "Petersen roles: " + why); };
    auto is_cycle = [&](const std::vector<Vertex>& c) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (!p.adjacent(c[i], c[(i + 1) % c.size()])) return false;
      }
      return true;
    };
    auto on = [](const std::vector<Vertex>& c, Vertex v) { return std::find(c.begin(), c.end(), v) != c.end(); };
    if (!is_cycle(r.inner_cycle) || !is_cycle(r.outer_cycle)) fail("declared 5-cycles are not cycles");
    if (!p.adjacent(r.a3, r.b3) || !on(r.inner_cycle, r.b3) || on(r.inner_cycle, r.a3)) {
      fail("e3 must leave the inner cycle at b3");
    }
    for (Vertex v : r.outer_cycle) {
      if (on(r.inner_cycle, v)) fail("the two 5-cycles must be disjoint");
    }
    const DotAnchors& b = r.bullet_roles;
    if (!on(r.outer_cycle, b.a3) || !on(r.outer_cycle, b.b3) || !on(r.outer_cycle, b.x1) ||
        !on(r.outer_cycle, b.x2)) {
      fail("e3, x1 and x2 must lie on C5");
    }
    if (!same_pair(b.x1, b.y1, others_sorted(p, b.a3, b.b3)) || !same_pair(b.x2, b.y2, others_sorted(p, b.b3, b.a3))) {
      fail("bullet neighbor roles do not match the graph");
    }
    return r;
  }();
  return roles;
}

const BlanusaRoles& blanusa_roles() {
  static const BlanusaRoles roles = [] {
    BlanusaRoles r;
    r.a3 = 0;
    r.b3 = 2;
    r.seven_cycle = {1, 5, 8, 16, 12, 14, 17};
    const CubicGraph& b = fixture("B18").graph;
    auto fail = [](const std::string& why) { throw Error(ErrorCode::FixtureCorrupt, "Blanuša roles: " + why); };
    if (!b.adjacent(r.a3, r.b3)) fail("e3 is not an edge");
    std::vector<Edge> cycle;
    for (std::size_t i = 0; i < r.seven_cycle.size(); ++i) {
      Vertex u = r.seven_cycle[i], v = r.seven_cycle[(i + 1) % r.seven_cycle.size()];
      if (!b.adjacent(u, v)) fail("seven-cycle is not a cycle");
      cycle.push_back(Edge::of(u, v));
    }
    for (const Edge& e : b.edges()) {
      if (e.touches(r.a3) || e.touches(r.b3)) continue;
      if (std::find(cycle.begin(), cycle.end(), e) == cycle.end()) r.tree_edges.push_back(e);
    }
    // The tree must span B18 - a3 - b3 with degree 2 exactly at the four
    // attachment vertices and degree 1 or 3 elsewhere.
    auto [x1, y1] = others_sorted(b, r.a3, r.b3);
    auto [x2, y2] = others_sorted(b, r.b3, r.a3);
    std::vector<int> deg(b.order(), 0);
    std::vector<int> parent(b.order());
    for (int i = 0; i < b.order(); ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const Edge& e : r.tree_edges) {
      ++deg[e.u];
      ++deg[e.v];
      int p = find(e.u), q = find(e.v);
      if (p == q) fail("tree edges contain a cycle");
      parent[p] = q;
    }
    if (static_cast<int>(r.tree_edges.size()) != b.order() - 3) fail("tree does not span B18 - a3 - b3");
    for (Vertex v = 0; v < b.order(); ++v) {
      if (v == r.a3 || v == r.b3) continue;
      const bool attach = v == x1 || v == y1 || v == x2 || v == y2;
      if (attach ? deg[v] != 2 : (deg[v] != 1 && deg[v] != 3)) fail("tree degree wrong at " + vtx(v));
    }
    return r;
  }();
  return roles;
}

ConstructedHistSnark reduce_i(const ConstructedHistSnark& g, int k, const ConstructionOptions& options) {
  require_element(g.profile, k);
  const auto& pr = petersen_roles();
  const CubicGraph& p10 = fixture("P10").graph;
  AnchorSearch search("reduce_i", g.profile.without(k).with(k + 4), options);

  // U = P10 - E(Ĉ); its edges avoiding a3 form a tree on the outer path.
  std::vector<Edge> u_edges;
  for (const Edge& e : p10.edges()) {
    auto on = [&](Vertex v) { return std::find(pr.inner_cycle.begin(), pr.inner_cycle.end(), v) != pr.inner_cycle.end(); };
    if (!(on(e.u) && on(e.v))) u_edges.push_back(e);
  }
  for (int e1_index : tree_edge_indices(g.hist)) {
    const Edge e1 = g.graph.edge(e1_index);
    for (int e2_index : outer_edges_of_length(g.graph, g.hist, k)) {
      const Edge e2 = g.graph.edge(e2_index);
      if (e1.shares_endpoint(e2)) continue;
      const DotAnchors an = complete_anchors(p10, e1.u, e1.v, e2.u, e2.v, pr.a3, pr.b3);
      Attempt at{dot_product(g.graph, p10, an), &g.graph, &g.hist.tree_edges, {e1}, &p10, u_edges, {}};
      const auto& m = at.surgery.h_map;
      at.added = {Edge::of(an.a1, m[an.x1]), Edge::of(an.b1, m[an.y1])};
      if (search.offer(std::move(at), anchor_roles(an), {{"k", k}}, {&g.provenance})) return search.take();
    }
  }
  return search.take();
}

ConstructedHistSnark reduce_ii(const ConstructedHistSnark& g, const ConstructionOptions& options) {
  const auto& pr = petersen_roles();
  const CubicGraph& p10 = fixture("P10").graph;
  AnchorSearch search("reduce_ii", g.profile.with(5), options);
  const DotAnchors& roles = pr.bullet_roles;

  // E(P10) minus the inner 5-cycle and the five edges at a3, b3.
  std::vector<Edge> p_edges;
  for (const Edge& e : p10.edges()) {
    auto on = [&](Vertex v) { return std::find(pr.inner_cycle.begin(), pr.inner_cycle.end(), v) != pr.inner_cycle.end(); };
    if (on(e.u) && on(e.v)) continue;
    p_edges.push_back(e);
  }
  const auto g_tree = tree_edge_indices(g.hist);
  for (int e2_index : g_tree) {
    const Edge e2 = g.graph.edge(e2_index);
    // Orient e2 so that e1 lies in b2's component of T_G - e2.
    EdgeSubset removed = ~g.hist.tree_edges;
    removed.set(e2_index);
    const auto comps = connected_components(g.graph, removed);
    for (int e1_index : g_tree) {
      const Edge e1 = g.graph.edge(e1_index);
      if (e1.shares_endpoint(e2)) continue;
      for (auto [a2, b2] : {std::pair{e2.u, e2.v}, std::pair{e2.v, e2.u}}) {
        bool same_side = false;
        for (const auto& c : comps) {
          if (c.test(b2) && c.test(e1.v)) same_side = true;
        }
        if (!same_side) continue;
        DotAnchors an = roles;
        an.a1 = e1.u;
        an.b1 = e1.v;
        an.a2 = a2;
        an.b2 = b2;
        Attempt at{bullet(g.graph, p10, an, BulletVariant::B1), &g.graph, &g.hist.tree_edges, {e1, e2},
                   &p10, p_edges, {}};
        const auto& L = at.surgery.ledger;
        const auto& m = at.surgery.h_map;
        const Vertex h1 = L.at("h1"), j1 = L.at("j1");
        at.added = {Edge::of(an.a1, h1),    Edge::of(h1, j1),       Edge::of(j1, an.b1), Edge::of(h1, m[an.x1]),
                    Edge::of(j1, m[an.y1]), Edge::of(a2, m[an.x2]), Edge::of(b2, m[an.y2])};
        if (search.offer(std::move(at), anchor_roles(an), {}, {&g.provenance})) return search.take();
      }
    }
  }
  return search.take();
}

ConstructedHistSnark reduce_iii(const ConstructedHistSnark& g, const ConstructionOptions& options) {
  ConstructedHistSnark result = union_disjoint(g, fixture_hist_snark("P10"), options);
  result.provenance.construction = "reduce_iii";
  return result;
}

ConstructedHistSnark reduce_iv(const ConstructedHistSnark& g, int k, const ConstructionOptions& options) {
  require_element(g.profile, k);
  const auto& br = blanusa_roles();
  const CubicGraph& b18 = fixture("B18").graph;
  AnchorSearch search("reduce_iv", g.profile.without(k).with(k + 2).with(7), options);
  for (int e1_index : outer_edges_of_length(g.graph, g.hist, k)) {
    const Edge e1 = g.graph.edge(e1_index);
    for (int e2_index : tree_edge_indices(g.hist)) {
      const Edge e2 = g.graph.edge(e2_index);
      if (e1.shares_endpoint(e2)) continue;
      const DotAnchors an = complete_anchors(b18, e1.u, e1.v, e2.u, e2.v, br.a3, br.b3);
      Attempt at{bullet(g.graph, b18, an, BulletVariant::B1), &g.graph, &g.hist.tree_edges, {e2},
                 &b18, br.tree_edges, {}};
      const auto& L = at.surgery.ledger;
      const auto& m = at.surgery.h_map;
      at.added = {Edge::of(L.at("h1"), m[an.x1]), Edge::of(L.at("j1"), m[an.y1]), Edge::of(an.a2, m[an.x2]),
                  Edge::of(an.b2, m[an.y2])};
      if (search.offer(std::move(at), anchor_roles(an), {{"k", k}}, {&g.provenance})) return search.take();
    }
  }
  return search.take();
}

}  // namespace snarklab

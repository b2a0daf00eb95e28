#include "snarklab/snarklab.h"

#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "snarklab/certify.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/error.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/formats.hpp"
#include "snarklab/hist.hpp"
#include "snarklab/realizer.hpp"

using namespace snarklab;

struct sl_graph {
  CubicGraph graph;
};

struct sl_hist {
  CubicGraph graph;
  Hist hist;
};

struct sl_construction {
  ConstructedHistSnark value;
};

namespace {

thread_local std::string last_error;

sl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCubic: return SL_ERR_NOT_CUBIC;
    case ErrorCode::NotSimple: return SL_ERR_NOT_SIMPLE;
    case ErrorCode::Inconsistent: return SL_ERR_INCONSISTENT;
    case ErrorCode::SyntaxError: return SL_ERR_SYNTAX;
    case ErrorCode::DuplicateEdge: return SL_ERR_DUPLICATE_EDGE;
    case ErrorCode::MalformedGraph6: return SL_ERR_MALFORMED_GRAPH6;
    case ErrorCode::NonAdjacentPair: return SL_ERR_NON_ADJACENT_PAIR;
    case ErrorCode::OverlappingCycles: return SL_ERR_OVERLAPPING_CYCLES;
    case ErrorCode::SizeCapExceeded: return SL_ERR_SIZE_CAP_EXCEEDED;
    case ErrorCode::NotAHist: return SL_ERR_NOT_A_HIST;
    case ErrorCode::InvalidAnchors: return SL_ERR_INVALID_ANCHORS;
    case ErrorCode::NoValidAnchors: return SL_ERR_NO_VALID_ANCHORS;
    case ErrorCode::ElementAbsent: return SL_ERR_ELEMENT_ABSENT;
    case ErrorCode::VerificationFailed: return SL_ERR_VERIFICATION_FAILED;
    case ErrorCode::NotAdmissible: return SL_ERR_NOT_ADMISSIBLE;
    case ErrorCode::ConstructionFailed: return SL_ERR_CONSTRUCTION_FAILED;
    case ErrorCode::UnknownFixture: return SL_ERR_UNKNOWN_FIXTURE;
    case ErrorCode::FixtureCorrupt: return SL_ERR_FIXTURE_CORRUPT;
    case ErrorCode::InvalidArgument: return SL_ERR_INVALID_ARGUMENT;
  }
  return SL_ERR_INTERNAL;
}

sl_status fail(sl_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into a status and the thread's error
// message.
template <class F>
sl_status guarded(F&& body) {
  try {
    body();
    return SL_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SL_ERR_INTERNAL, e.what());
  }
}

#define SL_REQUIRE(cond, what)                                    \
  do {                                                            \
    if (!(cond)) return fail(SL_ERR_INVALID_ARGUMENT, (what));    \
  } while (0)

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = duplicate(s);
}

TextFormat text_format(sl_format f) {
  switch (f) {
    case SL_FORMAT_AUTO: return TextFormat::Auto;
    case SL_FORMAT_GRAPH6: return TextFormat::Graph6;
    case SL_FORMAT_PAPER: return TextFormat::Paper;
    case SL_FORMAT_DOT: return TextFormat::Dot;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown format");
}

ConstructionOptions construction_options(const sl_construct_options* o) {
  ConstructionOptions out;
  if (!o) return out;
  out.verify_snark_structure = o->verify_snark_structure != 0;
  out.verify_colorability = o->verify_colorability != 0;
  if (o->max_vertices > 0) out.limits.max_vertices = o->max_vertices;
  return out;
}

OuterCycleProfile profile_of(const int* lengths, size_t count) {
  if (count && !lengths) throw Error(ErrorCode::InvalidArgument, "null lengths");
  return OuterCycleProfile(std::vector<int>(lengths, lengths + count));
}

sl_hist* make_hist(const CubicGraph& g, const Hist& h) { return new sl_hist{g, h}; }

nlohmann::ordered_json edge_json(const Edge& e) { return nlohmann::ordered_json::array({e.u, e.v}); }

template <class F>
sl_status construct(sl_construction** out, F&& body) {
  SL_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new sl_construction{body()}; });
}

}  // namespace

extern "C" {

SL_API const char* sl_version(void) { return "1.0.0"; }

SL_API const char* sl_status_name(sl_status status) {
  static const char* const names[] = {"Ok",
                                      "NotCubic",
                                      "NotSimple",
                                      "Inconsistent",
                                      "SyntaxError",
                                      "DuplicateEdge",
                                      "MalformedGraph6",
                                      "NonAdjacentPair",
                                      "OverlappingCycles",
                                      "SizeCapExceeded",
                                      "NotAHist",
                                      "InvalidAnchors",
                                      "NoValidAnchors",
                                      "ElementAbsent",
                                      "VerificationFailed",
                                      "NotAdmissible",
                                      "ConstructionFailed",
                                      "UnknownFixture",
                                      "FixtureCorrupt",
                                      "InvalidArgument",
                                      "Internal"};
  const auto i = static_cast<size_t>(status);
  return i < sizeof names / sizeof *names ? names[i] : "Unknown";
}

SL_API const char* sl_last_error_message(void) { return last_error.c_str(); }

SL_API void sl_string_free(char* s) { std::free(s); }

SL_API sl_status sl_graph_parse(const char* text, sl_format format, sl_graph** out, sl_hist** declared) {
  SL_REQUIRE(text && out, "null argument");
  *out = nullptr;
  if (declared) *declared = nullptr;
  return guarded([&] {
    PaperDocument doc = parse_single_graph(text, text_format(format));
    std::optional<Hist> hist;
    if (doc.outer_cycles) hist = hist_from_outer_cycles(doc.graph, *doc.outer_cycles);
    if (declared && hist) *declared = make_hist(doc.graph, *hist);
    *out = new sl_graph{std::move(doc.graph)};
  });
}

SL_API void sl_graph_free(sl_graph* g) { delete g; }

SL_API sl_graph* sl_graph_clone(const sl_graph* g) { return g ? new (std::nothrow) sl_graph{g->graph} : nullptr; }

SL_API int sl_graph_order(const sl_graph* g) { return g ? g->graph.order() : 0; }

SL_API int sl_graph_size(const sl_graph* g) { return g ? g->graph.size() : 0; }

SL_API sl_status sl_graph_edge(const sl_graph* g, int index, int* u, int* v) {
  SL_REQUIRE(g && u && v, "null argument");
  SL_REQUIRE(index >= 0 && index < g->graph.size(), "edge index out of range");
  *u = g->graph.edge(index).u;
  *v = g->graph.edge(index).v;
  return SL_OK;
}

SL_API sl_status sl_graph_emit(const sl_graph* g, sl_format format, const sl_hist* hist, char** out) {
  SL_REQUIRE(g && out, "null argument");
  return guarded([&] {
    if (hist && !(hist->graph == g->graph)) throw Error(ErrorCode::InvalidArgument, "hist belongs to another graph");
    switch (format) {
      case SL_FORMAT_GRAPH6: *out = duplicate(emit_graph6(g->graph) + "\n"); return;
      case SL_FORMAT_PAPER: {
        std::string text;
        if (hist) {
          // Declaration line first, as parse_paper_document expects.
          for (const auto& cycle : outer_cycles(hist->graph, hist->hist).vertices) {
            text += '[';
            for (std::size_t i = 0; i < cycle.size(); ++i) text += (i ? "," : "") + std::to_string(cycle[i]);
            text += ']';
          }
          text += '\n';
        }
        *out = duplicate(text + emit_paper_adjacency(g->graph) + "\n");
        return;
      }
      case SL_FORMAT_AUTO:
      case SL_FORMAT_DOT: break;
    }
    if (format == SL_FORMAT_AUTO) throw Error(ErrorCode::InvalidArgument, "choose an output format");
    if (!hist) {
      *out = duplicate(emit_dot(g->graph));
      return;
    }
    auto oc = outer_cycles(g->graph, hist->hist);
    *out = duplicate(emit_dot(g->graph, hist->hist.tree_edges, oc.edges));
  });
}

SL_API size_t sl_fixture_count(void) { return fixture_catalog().size(); }

SL_API const char* sl_fixture_name(size_t index) {
  const auto catalog = fixture_catalog();
  // Names are string literals, so data() is NUL-terminated.
  return index < catalog.size() ? catalog[index].name.data() : nullptr;
}

SL_API sl_status sl_fixture_load(const char* name, sl_graph** graph, sl_hist** hist) {
  SL_REQUIRE(name && graph, "null argument");
  *graph = nullptr;
  if (hist) *hist = nullptr;
  return guarded([&] {
    const Fixture& f = fixture(name);
    if (hist && f.hist) *hist = make_hist(f.graph, *f.hist);
    *graph = new sl_graph{f.graph};
  });
}

SL_API sl_status sl_certify(const sl_graph* g, int max_vertices, sl_certificate* out, char** details) {
  SL_REQUIRE(g && out, "null argument");
  return guarded([&] {
    CertifyOptions options;
    if (max_vertices > 0) options.limits.max_vertices = max_vertices;
    const SnarkCertificate c = certify_snark(g->graph, options);
    out->order = c.order;
    out->connected = c.connected;
    out->girth = c.girth;
    out->cyclically_4_edge_connected = c.cyclically_4_edge_connected ? int(*c.cyclically_4_edge_connected) : -1;
    out->three_edge_colorable = c.three_edge_colorable ? int(*c.three_edge_colorable) : -1;
    out->is_snark = c.is_snark;
    if (!details) return;
    nlohmann::ordered_json j;
    j["order"] = c.order;
    j["connected"] = c.connected;
    j["girth"] = c.girth;
    if (c.cyclically_4_edge_connected) j["cyclically_4_edge_connected"] = *c.cyclically_4_edge_connected;
    if (!c.violating_cut.empty()) {
      j["violating_cut"] = nlohmann::ordered_json::array();
      for (const Edge& e : c.violating_cut) j["violating_cut"].push_back(edge_json(e));
    }
    if (c.three_edge_colorable) j["three_edge_colorable"] = *c.three_edge_colorable;
    if (!c.coloring.empty()) j["coloring"] = c.coloring;
    j["coloring_exhausted"] = c.coloring_exhausted;
    j["is_snark"] = c.is_snark;
    j["checks_run"] = c.checks_run;
    *details = duplicate(j.dump());
  });
}

SL_API sl_status sl_hist_find(const sl_graph* g, int max_vertices, sl_hist** out) {
  SL_REQUIRE(g && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    HistSearchOptions options;
    if (max_vertices > 0) options.max_vertices = max_vertices;
    if (auto h = find_hist(g->graph, options)) *out = make_hist(g->graph, *h);
  });
}

SL_API sl_status sl_hist_enumerate(const sl_graph* g, size_t limit, int max_vertices, sl_hist*** out,
                                   size_t* count) {
  SL_REQUIRE(g && out && count, "null argument");
  *out = nullptr;
  *count = 0;
  return guarded([&] {
    HistSearchOptions options;
    if (max_vertices > 0) options.max_vertices = max_vertices;
    const auto hists = enumerate_hists(g->graph, limit, options);
    auto** array = static_cast<sl_hist**>(std::calloc(hists.size() ? hists.size() : 1, sizeof(sl_hist*)));
    if (!array) throw std::bad_alloc();
    for (size_t i = 0; i < hists.size(); ++i) array[i] = make_hist(g->graph, hists[i]);
    *out = array;
    *count = hists.size();
  });
}

SL_API void sl_hist_array_free(sl_hist** hists, size_t count) {
  if (!hists) return;
  for (size_t i = 0; i < count; ++i) delete hists[i];
  std::free(hists);
}

SL_API void sl_hist_free(sl_hist* h) { delete h; }

SL_API sl_status sl_hist_tree_edges(const sl_hist* h, int* u, int* v, size_t capacity, size_t* count) {
  SL_REQUIRE(h && count, "null argument");
  const auto edges = edges_of(h->graph, h->hist.tree_edges);
  *count = edges.size();
  SL_REQUIRE(capacity >= edges.size() && u && v, "buffer too small for the tree edges");
  for (size_t i = 0; i < edges.size(); ++i) {
    u[i] = edges[i].u;
    v[i] = edges[i].v;
  }
  return SL_OK;
}

SL_API sl_status sl_hist_profile(const sl_hist* h, int* lengths, size_t capacity, size_t* count) {
  SL_REQUIRE(h && count, "null argument");
  return guarded([&] {
    const auto p = outer_cycles(h->graph, h->hist).profile;
    *count = p.size();
    if (capacity < p.size() || (!lengths && p.size())) {
      throw Error(ErrorCode::InvalidArgument, "buffer too small for the profile");
    }
    std::copy(p.lengths().begin(), p.lengths().end(), lengths);
  });
}

SL_API sl_status sl_hist_profile_string(const sl_hist* h, char** out) {
  SL_REQUIRE(h && out, "null argument");
  return guarded([&] { *out = duplicate(outer_cycles(h->graph, h->hist).profile.to_string()); });
}

SL_API sl_status sl_hist_outer_cycles_json(const sl_hist* h, char** out) {
  SL_REQUIRE(h && out, "null argument");
  return guarded([&] {
    nlohmann::ordered_json j = outer_cycles(h->graph, h->hist).vertices;
    *out = duplicate(j.dump());
  });
}

SL_API sl_status sl_cdc(const sl_hist* h, int max_vertices, int* found, char** cycles) {
  SL_REQUIRE(h && found, "null argument");
  return guarded([&] {
    CdcOptions options;
    if (max_vertices > 0) options.max_vertices = max_vertices;
    auto cover = cdc_with_outer_cycles(h->graph, h->hist, options);
    *found = cover.has_value();
    if (!cycles) return;
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    if (cover) {
      for (const auto& c : *cover) {
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const Edge& e : edges_of(h->graph, c)) edges.push_back(edge_json(e));
        j.push_back(std::move(edges));
      }
    }
    *cycles = duplicate(j.dump());
  });
}

SL_API sl_status sl_surgery_apply(sl_surgery kind, const sl_graph* g, const sl_graph* h, const sl_anchors* anchors,
                                  sl_graph** out, char** ledger) {
  SL_REQUIRE(g && h && anchors && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    const sl_anchors& a = *anchors;
    const DotAnchors dot = complete_anchors(h->graph, a.a1, a.b1, a.a2, a.b2, a.a3, a.b3);
    SurgeryResult r;
    std::vector<std::pair<std::string, Vertex>> roles = {
        {"a1", dot.a1}, {"b1", dot.b1}, {"a2", dot.a2}, {"b2", dot.b2}, {"a3", dot.a3},
        {"b3", dot.b3}, {"x1", dot.x1}, {"y1", dot.y1}, {"x2", dot.x2}, {"y2", dot.y2}};
    switch (kind) {
      case SL_SURGERY_DOT: r = dot_product(g->graph, h->graph, dot); break;
      case SL_SURGERY_BULLET1: r = bullet(g->graph, h->graph, dot, BulletVariant::B1); break;
      case SL_SURGERY_BULLET2: r = bullet(g->graph, h->graph, dot, BulletVariant::B2); break;
      case SL_SURGERY_BULLET3: r = bullet(g->graph, h->graph, dot, BulletVariant::B3); break;
      case SL_SURGERY_TRIANGLE: {
        if (a.b1 < 0 || a.b1 >= g->graph.order() || !g->graph.adjacent(a.b1, a.c) || a.c == a.a1) {
          throw Error(ErrorCode::InvalidAnchors, "c must be a neighbor of b1 other than a1");
        }
        Vertex d = -1;
        for (Vertex w : g->graph.neighbors(a.b1)) {
          if (w != a.a1 && w != a.c) d = w;
        }
        r = triangle(g->graph, h->graph, TriangleAnchors{dot, a.c, d});
        roles.emplace_back("c", a.c);
        roles.emplace_back("d", d);
        break;
      }
      default: throw Error(ErrorCode::InvalidArgument, "unknown surgery");
    }
    if (ledger) {
      nlohmann::ordered_json j;
      j["anchors"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : roles) j["anchors"][k] = v;
      j["new_vertices"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.ledger.roles) j["new_vertices"][k] = v;
      j["h_map"] = r.h_map;
      *ledger = duplicate(j.dump());
    }
    *out = new sl_graph{std::move(r.graph)};
  });
}

SL_API void sl_construct_options_default(sl_construct_options* options) {
  if (!options) return;
  const ConstructionOptions defaults;
  options->verify_snark_structure = defaults.verify_snark_structure;
  options->verify_colorability = defaults.verify_colorability;
  options->max_vertices = defaults.limits.max_vertices;
}

SL_API sl_status sl_construction_from_fixture(const char* name, sl_construction** out) {
  SL_REQUIRE(name && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new sl_construction{fixture_hist_snark(name)}; });
}

SL_API sl_status sl_construction_from_hist(const char* label, const sl_hist* hist, sl_construction** out) {
  SL_REQUIRE(label && hist && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new sl_construction{wrap_hist_snark(label, hist->graph, hist->hist)}; });
}

SL_API void sl_construction_free(sl_construction* c) { delete c; }

SL_API sl_graph* sl_construction_graph(const sl_construction* c) {
  return c ? new (std::nothrow) sl_graph{c->value.graph} : nullptr;
}

SL_API sl_hist* sl_construction_hist(const sl_construction* c) {
  return c ? new (std::nothrow) sl_hist{c->value.graph, c->value.hist} : nullptr;
}

SL_API sl_status sl_construction_provenance(const sl_construction* c, int indent, char** json) {
  SL_REQUIRE(c && json, "null argument");
  return guarded([&] { *json = duplicate(provenance_to_json(c->value.provenance, indent)); });
}

SL_API sl_status sl_union_disjoint(const sl_construction* g, const sl_construction* h,
                                   const sl_construct_options* options, sl_construction** out) {
  SL_REQUIRE(g && h, "null argument");
  return construct(out, [&] { return union_disjoint(g->value, h->value, construction_options(options)); });
}

SL_API sl_status sl_union_merge(const sl_construction* g, int k, const sl_construction* h, int l,
                                const sl_construct_options* options, sl_construction** out) {
  SL_REQUIRE(g && h, "null argument");
  return construct(out, [&] { return union_merge(g->value, k, h->value, l, construction_options(options)); });
}

SL_API sl_status sl_reduce_i(const sl_construction* g, int k, const sl_construct_options* options,
                             sl_construction** out) {
  SL_REQUIRE(g, "null argument");
  return construct(out, [&] { return reduce_i(g->value, k, construction_options(options)); });
}

SL_API sl_status sl_reduce_ii(const sl_construction* g, const sl_construct_options* options, sl_construction** out) {
  SL_REQUIRE(g, "null argument");
  return construct(out, [&] { return reduce_ii(g->value, construction_options(options)); });
}

SL_API sl_status sl_reduce_iii(const sl_construction* g, const sl_construct_options* options,
                               sl_construction** out) {
  SL_REQUIRE(g, "null argument");
  return construct(out, [&] { return reduce_iii(g->value, construction_options(options)); });
}

SL_API sl_status sl_reduce_iv(const sl_construction* g, int k, const sl_construct_options* options,
                              sl_construction** out) {
  SL_REQUIRE(g, "null argument");
  return construct(out, [&] { return reduce_iv(g->value, k, construction_options(options)); });
}

SL_API sl_status sl_is_admissible(const int* lengths, size_t count, int* admissible, char** reason) {
  SL_REQUIRE(admissible, "null argument");
  return guarded([&] {
    const Admissibility a = is_admissible(profile_of(lengths, count));
    *admissible = a.admissible;
    put(reason, a.reason);
  });
}

SL_API sl_status sl_realize_plan(const int* lengths, size_t count, char** plan) {
  SL_REQUIRE(plan, "null argument");
  return guarded([&] { *plan = duplicate(plan_to_string(plan_realization(profile_of(lengths, count)))); });
}

SL_API sl_status sl_realize(const int* lengths, size_t count, const sl_construct_options* options,
                            sl_construction** out) {
  return construct(out, [&] { return realize(profile_of(lengths, count), construction_options(options)); });
}

SL_API sl_status sl_scan_graph6(const char* text, unsigned threads, int max_vertices, int certify,
                                sl_scan_summary* summary, char** records, char** table) {
  SL_REQUIRE(text, "null argument");
  return guarded([&] {
    ScanOptions options;
    options.threads = threads;
    options.certify = certify != 0;
    if (max_vertices > 0) {
      options.limits.max_vertices = max_vertices;
      options.hist.max_vertices = max_vertices;
    }
    const ScanReport report = scan_graph6_text(text, options);
    if (summary) *summary = {report.graphs, report.errors, report.with_hist, report.snarks, report.snarks_with_hist};
    if (records) {
      std::string lines;
      for (const auto& r : report.records) lines += scan_record_json(r) + "\n";
      *records = duplicate(lines);
    }
    put(table, scan_summary_table(report));
  });
}

}  // extern "C"

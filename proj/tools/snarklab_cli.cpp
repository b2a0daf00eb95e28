// snarklab command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict or not
// admissible, 2 parse or usage error, 3 size cap exceeded, 4 construction or
// verification failure, 5 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snarklab/snarklab.h"

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCap = 3, kConstruction = 4, kInternal = 5 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(sl_status s) {
  switch (s) {
    case SL_OK: return kOk;
    case SL_ERR_SIZE_CAP_EXCEEDED: return kCap;
    case SL_ERR_NOT_ADMISSIBLE: return kNegative;
    case SL_ERR_VERIFICATION_FAILED:
    case SL_ERR_CONSTRUCTION_FAILED:
    case SL_ERR_NO_VALID_ANCHORS: return kConstruction;
    case SL_ERR_FIXTURE_CORRUPT:
    case SL_ERR_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

void check(sl_status s) {
  if (s != SL_OK) throw Failure{exit_code_for(s), sl_last_error_message()};
}

struct GraphDeleter {
  void operator()(sl_graph* g) const { sl_graph_free(g); }
};
using Graph = std::unique_ptr<sl_graph, GraphDeleter>;
struct HistDeleter {
  void operator()(sl_hist* h) const { sl_hist_free(h); }
};
using Hist = std::unique_ptr<sl_hist, HistDeleter>;
struct ConstructionDeleter {
  void operator()(sl_construction* c) const { sl_construction_free(c); }
};
using Construction = std::unique_ptr<sl_construction, ConstructionDeleter>;

// Wraps an out-parameter char* so the result is freed on scope exit.
class OutString {
 public:
  char** operator&() { return &raw_; }
  ~OutString() { sl_string_free(raw_); }
  std::string str() const { return raw_ ? raw_ : ""; }

 private:
  char* raw_ = nullptr;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kUsage, "cannot read " + path};
    buf << in.rdbuf();
  }
  return buf.str();
}

sl_format parse_format(const std::string& name, bool output) {
  if (name == "auto" && !output) return SL_FORMAT_AUTO;
  if (name == "graph6") return SL_FORMAT_GRAPH6;
  if (name == "paper") return SL_FORMAT_PAPER;
  if (name == "dot" && output) return SL_FORMAT_DOT;
  throw Failure{kUsage, "unsupported format '" + name + "'"};
}

struct Loaded {
  Graph graph;
  Hist hist;  // declared Hist, if any
  std::string label;
  bool from_file = false;
};

Loaded load_fixture(const std::string& name) {
  sl_graph* g = nullptr;
  sl_hist* h = nullptr;
  check(sl_fixture_load(name.c_str(), &g, &h));
  return {Graph(g), Hist(h), name, false};
}

Loaded load_file(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  sl_graph* g = nullptr;
  sl_hist* h = nullptr;
  check(sl_graph_parse(text.c_str(), parse_format(format, false), &g, &h));
  return {Graph(g), Hist(h), path, true};
}

// A construction operand: an existing file, otherwise a fixture name.
Loaded load_operand(const std::string& spec, const std::string& format) {
  if (spec == "-" || std::filesystem::exists(spec)) return load_file(spec, format);
  return load_fixture(spec);
}

struct Input {
  std::string path;
  std::string fixture;
  std::string format = "auto";

  void add_to(CLI::App* cmd) {
    cmd->add_option("input", path, "graph file ('-' for stdin)");
    cmd->add_option("--fixture", fixture, "catalog name such as P10, B18, T(5,7), T888, X1");
    cmd->add_option("--format", format, "input format: auto, graph6 or paper")
        ->check(CLI::IsMember({"auto", "graph6", "paper"}));
  }

  Loaded load() const {
    if (!fixture.empty() && !path.empty()) throw Failure{kUsage, "give either an input file or --fixture"};
    if (!fixture.empty()) return load_fixture(fixture);
    if (path.empty()) throw Failure{kUsage, "no input: give a file or --fixture"};
    return load_file(path, format);
  }
};

struct Caps {
  int max_vertices = 200;
  int hist_cap = 100;
  int cdc_cap = 20;
};

std::string yes_no(int v) { return v < 0 ? "not run" : v ? "yes" : "no"; }

std::vector<std::pair<int, int>> tree_edges(const sl_hist* h) {
  size_t count = 0;
  sl_hist_tree_edges(h, nullptr, nullptr, 0, &count);
  std::vector<int> u(count), v(count);
  check(sl_hist_tree_edges(h, u.data(), v.data(), count, &count));
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < count; ++i) out.emplace_back(u[i], v[i]);
  return out;
}

std::string profile_string(const sl_hist* h) {
  OutString s;
  check(sl_hist_profile_string(h, &s));
  return s.str();
}

std::string outer_cycles_text(const sl_hist* h) {
  OutString s;
  check(sl_hist_outer_cycles_json(h, &s));
  return s.str();
}

void print_hist(const sl_hist* h, std::ostream& out) {
  out << "profile " << profile_string(h) << "\n";
  out << "tree";
  for (auto [u, v] : tree_edges(h)) out << ' ' << u << '-' << v;
  out << "\nouter cycles " << outer_cycles_text(h) << "\n";
}

std::string emit(const sl_graph* g, sl_format format, const sl_hist* h = nullptr) {
  OutString s;
  check(sl_graph_emit(g, format, h, &s));
  return s.str();
}

std::vector<int> parse_multiset(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Failure{kUsage, "bad multiset element '" + item + "'"};
    }
  }
  if (out.empty()) throw Failure{kUsage, "empty multiset"};
  return out;
}

int cmd_check(const Input& in, const Caps& caps, bool json) {
  Loaded l = in.load();
  sl_certificate c{};
  OutString details;
  check(sl_certify(l.graph.get(), caps.max_vertices, &c, json ? &details : nullptr));
  if (json) {
    std::cout << details.str() << "\n";
  } else {
    std::cout << "order                        " << c.order << "\n"
              << "connected                    " << yes_no(c.connected) << "\n"
              << "girth                        " << c.girth << "\n"
              << "cyclically 4-edge-connected  " << yes_no(c.cyclically_4_edge_connected) << "\n"
              << "3-edge-colorable             " << yes_no(c.three_edge_colorable)
              << (c.three_edge_colorable == 0 ? " (exhaustive)" : "") << "\n"
              << "is_snark                     " << (c.is_snark ? "true" : "false") << "\n";
  }
  return c.is_snark ? kOk : kNegative;
}

int cmd_hist(const Input& in, const Caps& caps, bool all, size_t limit) {
  Loaded l = in.load();
  if (!all) {
    sl_hist* h = nullptr;
    check(sl_hist_find(l.graph.get(), caps.hist_cap, &h));
    Hist owned(h);
    if (!owned) {
      std::cout << "no Hist (exhaustive)\n";
      return kNegative;
    }
    print_hist(owned.get(), std::cout);
    return kOk;
  }
  sl_hist** hists = nullptr;
  size_t count = 0;
  check(sl_hist_enumerate(l.graph.get(), limit, caps.hist_cap, &hists, &count));
  struct Release {
    sl_hist** hists;
    size_t count;
    ~Release() { sl_hist_array_free(hists, count); }
  } release{hists, count};
  for (size_t i = 0; i < count; ++i) {
    std::cout << "hist " << i + 1 << "\n";
    print_hist(hists[i], std::cout);
  }
  std::cout << count << " Hist(s)" << (count < limit ? " (exhaustive)" : " (limit reached)") << "\n";
  return count ? kOk : kNegative;
}

int cmd_oc(const Input& in) {
  Loaded l = in.load();
  if (!l.hist) throw Failure{kUsage, "input declares no outer cycles; use 'hist' to search for one"};
  std::cout << "outer cycles " << outer_cycles_text(l.hist.get()) << "\n";
  std::cout << "profile " << profile_string(l.hist.get()) << "\n";
  return kOk;
}

int cmd_cdc(const Input& in, const Caps& caps) {
  Loaded l = in.load();
  Hist h = std::move(l.hist);
  if (!h) {
    sl_hist* found = nullptr;
    check(sl_hist_find(l.graph.get(), caps.hist_cap, &found));
    h.reset(found);
    if (!h) {
      std::cout << "no Hist (exhaustive)\n";
      return kNegative;
    }
  }
  int found = 0;
  OutString cycles;
  check(sl_cdc(h.get(), caps.cdc_cap, &found, &cycles));
  std::cout << "profile " << profile_string(h.get()) << "\n";
  if (!found) {
    std::cout << "no cycle double cover containing the outer cycles (exhaustive)\n";
    return kNegative;
  }
  std::cout << "cycle double cover " << cycles.str() << "\n";
  return kOk;
}

struct ConstructArgs {
  std::string g, h, format = "auto", emit_format = "graph6";
  int a1 = -1, b1 = -1, a2 = -1, b2 = -1, a3 = -1, b3 = -1, c = -1;
  int k = 0, l = 0;
  bool verify_colorability = false;
  bool skip_structure = false;
};

// Fixtures keep their catalog provenance; files use their declared Hist or
// the first one found.
Construction as_construction(Loaded loaded, const Caps& caps) {
  sl_construction* c = nullptr;
  if (!loaded.from_file) {
    check(sl_construction_from_fixture(loaded.label.c_str(), &c));
    return Construction(c);
  }
  Hist h = std::move(loaded.hist);
  if (!h) {
    sl_hist* found = nullptr;
    check(sl_hist_find(loaded.graph.get(), caps.hist_cap, &found));
    if (!found) throw Failure{kConstruction, loaded.label + " has no Hist"};
    h.reset(found);
  }
  check(sl_construction_from_hist(loaded.label.c_str(), h.get(), &c));
  return Construction(c);
}

int cmd_construct(const std::string& op, const ConstructArgs& a, const Caps& caps) {
  const sl_format out_format = parse_format(a.emit_format, true);
  if (a.g.empty()) throw Failure{kUsage, "--g is required"};
  const bool raw = op == "dot" || op == "bullet1" || op == "bullet2" || op == "bullet3" || op == "triangle";
  if (raw) {
    if (a.h.empty()) throw Failure{kUsage, "--h is required"};
    for (int v : {a.a1, a.b1, a.a2, a.b2, a.a3, a.b3}) {
      if (v < 0) throw Failure{kUsage, "--a1 --b1 --a2 --b2 --a3 --b3 are required"};
    }
    if (op == "triangle" && a.c < 0) throw Failure{kUsage, "--c is required for triangle"};
    Loaded g = load_operand(a.g, a.format);
    Loaded h = load_operand(a.h, a.format);
    const sl_surgery kind = op == "dot"       ? SL_SURGERY_DOT
                            : op == "bullet1" ? SL_SURGERY_BULLET1
                            : op == "bullet2" ? SL_SURGERY_BULLET2
                            : op == "bullet3" ? SL_SURGERY_BULLET3
                                              : SL_SURGERY_TRIANGLE;
    const sl_anchors anchors{a.a1, a.b1, a.a2, a.b2, a.a3, a.b3, a.c};
    sl_graph* out = nullptr;
    OutString ledger;
    check(sl_surgery_apply(kind, g.graph.get(), h.graph.get(), &anchors, &out, &ledger));
    Graph result(out);
    std::cout << ledger.str() << "\n" << emit(result.get(), out_format);
    return kOk;
  }

  sl_construct_options options;
  sl_construct_options_default(&options);
  options.verify_colorability = a.verify_colorability;
  options.verify_snark_structure = !a.skip_structure;
  options.max_vertices = caps.max_vertices;

  Construction g = as_construction(load_operand(a.g, a.format), caps);
  sl_construction* out = nullptr;
  if (op == "union" || op == "merge") {
    if (a.h.empty()) throw Failure{kUsage, "--h is required"};
    Construction h = as_construction(load_operand(a.h, a.format), caps);
    if (op == "union") {
      check(sl_union_disjoint(g.get(), h.get(), &options, &out));
    } else {
      check(sl_union_merge(g.get(), a.k, h.get(), a.l, &options, &out));
    }
  } else if (op == "reduce-i") {
    check(sl_reduce_i(g.get(), a.k, &options, &out));
  } else if (op == "reduce-ii") {
    check(sl_reduce_ii(g.get(), &options, &out));
  } else if (op == "reduce-iii") {
    check(sl_reduce_iii(g.get(), &options, &out));
  } else if (op == "reduce-iv") {
    check(sl_reduce_iv(g.get(), a.k, &options, &out));
  } else {
    throw Failure{kUsage, "unknown construction " + op};
  }
  Construction result(out);
  Graph graph(sl_construction_graph(result.get()));
  Hist hist(sl_construction_hist(result.get()));
  OutString provenance;
  check(sl_construction_provenance(result.get(), 2, &provenance));
  std::cout << provenance.str() << "\n"
            << "profile " << profile_string(hist.get()) << "\n"
            << emit(graph.get(), out_format, hist.get());
  return kOk;
}

int cmd_realize(const std::string& multiset, const std::string& emit_format, bool show_plan, bool show_provenance,
                bool certify, const Caps& caps) {
  const sl_format out_format = parse_format(emit_format, true);
  const std::vector<int> s = parse_multiset(multiset);
  int admissible = 0;
  OutString reason;
  check(sl_is_admissible(s.data(), s.size(), &admissible, &reason));
  if (!admissible) {
    std::cout << "not admissible: " << reason.str() << "\n";
    return kNegative;
  }
  if (show_plan) {
    OutString plan;
    check(sl_realize_plan(s.data(), s.size(), &plan));
    std::cout << plan.str();
  }
  sl_construct_options options;
  sl_construct_options_default(&options);
  options.max_vertices = caps.max_vertices;
  sl_construction* out = nullptr;
  check(sl_realize(s.data(), s.size(), &options, &out));
  Construction result(out);
  Graph graph(sl_construction_graph(result.get()));
  Hist hist(sl_construction_hist(result.get()));
  std::cout << "order " << sl_graph_order(graph.get()) << "\n"
            << "profile " << profile_string(hist.get()) << "\n";
  if (certify) {
    sl_certificate c{};
    check(sl_certify(graph.get(), caps.max_vertices, &c, nullptr));
    std::cout << "is_snark " << (c.is_snark ? "true" : "false") << "\n";
    if (!c.is_snark) return kConstruction;
  }
  if (show_provenance) {
    OutString provenance;
    check(sl_construction_provenance(result.get(), 2, &provenance));
    std::cout << provenance.str() << "\n";
  }
  std::cout << emit(graph.get(), out_format, hist.get());
  return kOk;
}

int cmd_scan(const std::string& path, unsigned threads, bool certify, bool summary_only, const Caps& caps) {
  const std::string text = read_input(path);
  sl_scan_summary summary{};
  OutString records, table;
  check(sl_scan_graph6(text.c_str(), threads, caps.max_vertices, certify, &summary, summary_only ? nullptr : &records,
                       &table));
  if (!summary_only) std::cout << records.str() << "\n";
  std::cout << table.str();
  return summary.snarks == summary.snarks_with_hist ? kOk : kNegative;
}

int cmd_fixtures_list() {
  for (size_t i = 0; i < sl_fixture_count(); ++i) {
    const std::string name = sl_fixture_name(i);
    Loaded l = load_fixture(name);
    std::cout << name << std::string(name.size() < 10 ? 10 - name.size() : 1, ' ') << sl_graph_order(l.graph.get())
              << "  " << (l.hist ? profile_string(l.hist.get()) : "no Hist") << "\n";
  }
  return kOk;
}

int cmd_fixtures_emit(const std::string& name, const std::string& format) {
  Loaded l = load_fixture(name);
  std::cout << emit(l.graph.get(), parse_format(format, true), l.hist.get());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Snark certification, Hists, outer-cycle profiles and constructions"};
  app.require_subcommand(1);
  Caps caps;
  if (const char* env = std::getenv("SNARKLAB_MAX_VERTICES")) {
    try {
      caps.max_vertices = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: SNARKLAB_MAX_VERTICES must be an integer\n";
      return kUsage;
    }
  }
  app.add_option("--max-vertices", caps.max_vertices, "vertex cap for certification and constructions")
      ->capture_default_str();
  app.add_option("--hist-limit", caps.hist_cap, "vertex cap for Hist search")->capture_default_str();
  app.add_option("--cdc-cap", caps.cdc_cap, "vertex cap for the cycle double cover search")->capture_default_str();

  Input check_in, hist_in, oc_in, cdc_in;
  bool json = false;
  auto* check_cmd = app.add_subcommand("check", "certify whether a graph is a snark");
  check_in.add_to(check_cmd);
  check_cmd->add_flag("--json", json, "print the full certificate as JSON");

  bool all = false;
  size_t limit = 100;
  auto* hist_cmd = app.add_subcommand("hist", "find a Hist and its outer-cycle profile");
  hist_in.add_to(hist_cmd);
  hist_cmd->add_flag("--all", all, "enumerate Hists up to --limit");
  hist_cmd->add_option("--limit", limit, "maximum number of Hists with --all")->capture_default_str();

  auto* oc_cmd = app.add_subcommand("oc", "outer cycles and profile of a declared Hist");
  oc_in.add_to(oc_cmd);

  auto* cdc_cmd = app.add_subcommand("cdc", "search a cycle double cover containing all outer cycles");
  cdc_in.add_to(cdc_cmd);

  ConstructArgs cargs;
  std::string op;
  auto* construct_cmd = app.add_subcommand("construct", "apply a surgery or a Hist-carrying construction");
  construct_cmd->set_help_flag("--help", "print this help and exit");  // frees --h
  construct_cmd->add_option("operation", op, "dot|bullet1|bullet2|bullet3|triangle|union|merge|reduce-i|reduce-ii|"
                                             "reduce-iii|reduce-iv")
      ->required()
      ->check(CLI::IsMember({"dot", "bullet1", "bullet2", "bullet3", "triangle", "union", "merge", "reduce-i",
                             "reduce-ii", "reduce-iii", "reduce-iv"}));
  construct_cmd->add_option("--g", cargs.g, "first operand: file or fixture name");
  construct_cmd->add_option("--h", cargs.h, "second operand: file or fixture name");
  construct_cmd->add_option("--format", cargs.format, "operand file format")
      ->check(CLI::IsMember({"auto", "graph6", "paper"}));
  construct_cmd->add_option("--emit", cargs.emit_format, "output format: graph6, paper or dot")
      ->capture_default_str();
  for (auto [flag, target] : {std::pair{"--a1", &cargs.a1}, {"--b1", &cargs.b1}, {"--a2", &cargs.a2},
                              {"--b2", &cargs.b2}, {"--a3", &cargs.a3}, {"--b3", &cargs.b3}, {"--c", &cargs.c}}) {
    construct_cmd->add_option(flag, *target, "anchor vertex");
  }
  construct_cmd->add_option("--k", cargs.k, "outer-cycle length in G");
  construct_cmd->add_option("--l", cargs.l, "outer-cycle length in H");
  construct_cmd->add_flag("--verify-colorability", cargs.verify_colorability,
                          "also verify non-colorability of the output");
  construct_cmd->add_flag("--skip-structure-check", cargs.skip_structure, "skip the girth and cyclic connectivity check");

  std::string multiset, realize_format = "graph6";
  bool plan = false, provenance = false, realize_certify = false;
  auto* realize_cmd = app.add_subcommand("realize", "build a Hist-snark with a given outer-cycle profile");
  realize_cmd->add_option("multiset", multiset, "comma-separated lengths, e.g. 5,6,7")->required();
  realize_cmd->add_option("--emit", realize_format, "output format: graph6, paper or dot")->capture_default_str();
  realize_cmd->add_flag("--plan", plan, "print the construction plan");
  realize_cmd->add_flag("--provenance", provenance, "print the provenance JSON");
  realize_cmd->add_flag("--certify", realize_certify, "certify the output as a snark");

  std::string scan_path;
  unsigned threads = 0;
  bool no_certify = false, summary_only = false;
  auto* scan_cmd = app.add_subcommand("scan", "Hist search over a graph6 stream");
  scan_cmd->add_option("input", scan_path, "graph6 file ('-' for stdin)")->required();
  scan_cmd->add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();
  scan_cmd->add_flag("--no-certify", no_certify, "skip snark certification");
  scan_cmd->add_flag("--summary-only", summary_only, "print only the summary table");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or emit catalog graphs");
  fixtures_cmd->require_subcommand(1);
  fixtures_cmd->add_subcommand("list", "list catalog entries");
  std::string fixture_name, fixture_format = "paper";
  auto* emit_cmd = fixtures_cmd->add_subcommand("emit", "emit a catalog graph");
  emit_cmd->add_option("name", fixture_name, "fixture name")->required();
  emit_cmd->add_option("--format", fixture_format, "graph6, paper or dot")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check_in, caps, json);
    if (*hist_cmd) return cmd_hist(hist_in, caps, all, limit);
    if (*oc_cmd) return cmd_oc(oc_in);
    if (*cdc_cmd) return cmd_cdc(cdc_in, caps);
    if (*construct_cmd) return cmd_construct(op, cargs, caps);
    if (*realize_cmd) return cmd_realize(multiset, realize_format, plan, provenance, realize_certify, caps);
    if (*scan_cmd) return cmd_scan(scan_path, threads, !no_certify, summary_only, caps);
    if (*fixtures_cmd) {
      if (*emit_cmd) return cmd_fixtures_emit(fixture_name, fixture_format);
      return cmd_fixtures_list();
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

#include "snarklab/realizer.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "snarklab/error.hpp"
#include "snarklab/fixtures.hpp"
#include "snarklab/formats.hpp"

namespace snarklab {

Admissibility is_admissible(const OuterCycleProfile& s) {
  if (s.empty()) return {false, "the multiset is empty"};
  for (int c : s.lengths()) {
    if (c < 5) return {false, "every length must be at least 5 (" + std::to_string(c) + " is smaller)"};
  }
  if (s.size() == 1) {
    const int c = s.lengths().front();
    if (c != 6 && c < 10) {
      return {false, "a singleton {" + std::to_string(c) + "} must be {6} or have its element at least 10"};
    }
  }
  return {true, {}};
}

namespace {

PlanStep leaf(const OuterCycleProfile& target, std::string name) {
  return PlanStep{"fixture", target, std::move(name), {}, {}};
}

PlanStep step(std::string op, const OuterCycleProfile& target, std::vector<int> params, std::vector<PlanStep> inputs) {
  return PlanStep{std::move(op), target, {}, std::move(params), std::move(inputs)};
}

std::string pair_fixture(int x, int y) { return "T(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

PlanStep plan(const OuterCycleProfile& s) {
  if (auto a = is_admissible(s); !a.admissible) {
    throw Error(ErrorCode::NotAdmissible, s.to_string() + ": " + a.reason);
  }
  const auto& c = s.lengths();

  if (c.size() == 1) {
    switch (c[0]) {
      case 6: return leaf(s, "P10");
      case 10: return leaf(s, "B18");
      case 11: {
        PlanStep p10 = leaf({6}, "P10");
        return step("union_merge", s, {6, 6}, {p10, p10});
      }
      case 12: return leaf(s, "L22");
      case 13: return leaf(s, "T(13)");
      default: {
        const int k = c[0] - 4;
        return step("reduce_i", s, {k}, {plan({k})});
      }
    }
  }

  // Shrink the largest element above 8 first.
  if (s.max() > 8) {
    const int m = s.max();
    return step("reduce_i", s, {m - 4}, {plan(s.without(m).with(m - 4))});
  }

  if (c.size() >= 4) {
    const OuterCycleProfile s2{c[0], c[1]};
    const OuterCycleProfile s3(std::vector<int>(c.begin() + 2, c.end()));
    if (!is_admissible(s2).admissible || !is_admissible(s3).admissible) {
      throw Error(ErrorCode::ConstructionFailed, "split of " + s.to_string() + " produced an inadmissible part");
    }
    return step("union_disjoint", s, {}, {plan(s2), plan(s3)});
  }

  // Every element now lies in [5, 8].
  if (c.size() == 2) {
    const OuterCycleProfile p10{6};
    if (s == OuterCycleProfile{5, 6}) return step("reduce_ii", s, {}, {leaf(p10, "P10")});
    if (s == OuterCycleProfile{6, 6}) return step("reduce_iii", s, {}, {leaf(p10, "P10")});
    if (s == OuterCycleProfile{7, 8}) return step("reduce_iv", s, {6}, {leaf(p10, "P10")});
    return leaf(s, pair_fixture(c[0], c[1]));
  }

  if (s.contains(5)) return step("reduce_ii", s, {}, {plan(s.without(5))});
  if (s.contains(6)) return step("reduce_iii", s, {}, {plan(s.without(6))});
  if (s.contains(7)) {
    // {7, y, z}: realize {y - 2, z}, then y - 2 -> y and a new 7.
    const auto rest = s.without(7).lengths();
    const int y = rest[0];
    const int z = rest[1];
    return step("reduce_iv", s, {y - 2}, {plan(OuterCycleProfile{y - 2, z})});
  }
  return leaf(s, "T(8,8,8)");
}

class Executor {
 public:
  explicit Executor(const ConstructionOptions& options) : options_(options) {}

  const ConstructedHistSnark& run(const PlanStep& p) {
    if (auto it = memo_.find(p.target); it != memo_.end()) return it->second;
    ConstructedHistSnark result = build(p);
    if (result.profile != p.target) {
      throw Error(ErrorCode::ConstructionFailed,
                  p.operation + " produced " + result.profile.to_string() + " instead of " + p.target.to_string());
    }
    return memo_.emplace(p.target, std::move(result)).first->second;
  }

 private:
  ConstructedHistSnark build(const PlanStep& p) {
    if (p.operation == "fixture") return fixture_hist_snark(p.fixture);
    const ConstructedHistSnark& a = run(p.inputs.at(0));
    try {
      if (p.operation == "union_disjoint") {
        // std::map references survive the insertion done by the second run().
        const ConstructedHistSnark& b = run(p.inputs.at(1));
        return union_disjoint(a, b, options_);
      }
      if (p.operation == "union_merge") {
        const ConstructedHistSnark& b = run(p.inputs.at(1));
        return union_merge(a, p.parameters.at(0), b, p.parameters.at(1), options_);
      }
      if (p.operation == "reduce_i") return reduce_i(a, p.parameters.at(0), options_);
      if (p.operation == "reduce_ii") return reduce_ii(a, options_);
      if (p.operation == "reduce_iii") return reduce_iii(a, options_);
      if (p.operation == "reduce_iv") return reduce_iv(a, p.parameters.at(0), options_);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::VerificationFailed || e.code() == ErrorCode::NoValidAnchors) {
        throw Error(ErrorCode::ConstructionFailed, "building " + p.target.to_string() + ": " + e.what());
      }
      throw;
    }
    throw Error(ErrorCode::ConstructionFailed, "unknown plan operation " + p.operation);
  }

  const ConstructionOptions& options_;
  std::map<OuterCycleProfile, ConstructedHistSnark> memo_;
};

void render(const PlanStep& p, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << p.target.to_string() << " <- " << p.operation;
  if (!p.fixture.empty()) out << ' ' << p.fixture;
  if (!p.parameters.empty()) {
    out << '(';
    for (std::size_t i = 0; i < p.parameters.size(); ++i) out << (i ? "," : "") << p.parameters[i];
    out << ')';
  }
  out << '\n';
  for (const auto& in : p.inputs) render(in, depth + 1, out);
}

}  // namespace

PlanStep plan_realization(const OuterCycleProfile& s) { return plan(s); }

std::string plan_to_string(const PlanStep& p) {
  std::ostringstream out;
  render(p, 0, out);
  return out.str();
}

ConstructedHistSnark realize(const OuterCycleProfile& s, const ConstructionOptions& options) {
  const PlanStep p = plan(s);
  Executor ex(options);
  return ex.run(p);
}

namespace {

ScanRecord scan_one(std::size_t index, const std::function<CubicGraph()>& load, const ScanOptions& options) {
  ScanRecord r;
  r.index = index;
  try {
    const CubicGraph g = load();
    r.order = g.order();
    if (options.certify) {
      CertifyOptions co;
      co.limits = options.limits;
      r.is_snark = certify_snark(g, co).is_snark;
    }
    if (auto h = find_hist(g, options.hist)) {
      r.hist_found = true;
      r.profile = outer_cycles(g, *h).profile;
    }
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

ScanReport run_scan(std::size_t count, const std::function<ScanRecord(std::size_t)>& work, unsigned threads) {
  ScanReport report;
  report.records.resize(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) report.records[i] = work(i);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& r : report.records) {
    ++report.graphs;
    if (r.error) {
      ++report.errors;
      continue;
    }
    if (r.hist_found) ++report.with_hist;
    if (r.is_snark.value_or(false)) {
      ++report.snarks;
      if (r.hist_found) ++report.snarks_with_hist;
    }
  }
  return report;
}

}  // namespace

ScanReport scan_for_hists(std::span<const CubicGraph> graphs, const ScanOptions& options) {
  return run_scan(
      graphs.size(), [&](std::size_t i) { return scan_one(i, [&] { return graphs[i]; }, options); },
      options.threads);
}

ScanReport scan_graph6_text(std::string_view text, const ScanOptions& options) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
  }
  return run_scan(
      lines.size(),
      [&](std::size_t i) {
        return scan_one(
            i,
            [&] {
              auto gs = parse_graph6(lines[i], true);
              if (gs.size() != 1) throw Error(ErrorCode::MalformedGraph6, "expected one graph on the line");
              return gs.front();
            },
            options);
      },
      options.threads);
}

std::string scan_record_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["index"] = r.index;
  if (r.error) {
    j["error"] = *r.error;
    return j.dump();
  }
  j["order"] = r.order;
  if (r.is_snark) j["is_snark"] = *r.is_snark;
  j["hist_found"] = r.hist_found;
  if (r.profile) j["profile"] = r.profile->lengths();
  return j.dump();
}

std::string scan_summary_table(const ScanReport& report) {
  std::ostringstream out;
  auto row = [&](std::string_view label, std::size_t value) {
    out << label << std::string(20 - label.size(), ' ') << value << '\n';
  };
  row("graphs", report.graphs);
  row("errors", report.errors);
  row("with hist", report.with_hist);
  row("snarks", report.snarks);
  row("snarks with hist", report.snarks_with_hist);
  row("snarks without hist", report.snarks - report.snarks_with_hist);
  return out.str();
}

}  // namespace snarklab

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snarklab/certify.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/hist.hpp"

namespace snarklab {

struct Admissibility {
  bool admissible = false;
  /// Names the violated condition; empty when admissible.
  std::string reason;
};

/// Every length is at least 5, and a singleton {c} needs c = 6 or c >= 10.
Admissibility is_admissible(const OuterCycleProfile& s);

/// One node of a realization plan. `operation` is one of fixture,
/// union_disjoint, union_merge, reduce_i, reduce_ii, reduce_iii, reduce_iv.
struct PlanStep {
  std::string operation;
  OuterCycleProfile target;
  std::string fixture;                 // fixture leaves only
  std::vector<int> parameters;         // k for reduce_i/iv, k and l for union_merge
  std::vector<PlanStep> inputs;
};

/// Throws NotAdmissible.
PlanStep plan_realization(const OuterCycleProfile& s);

/// Indented one-line-per-step rendering.
std::string plan_to_string(const PlanStep& plan);

/// Builds a Hist-snark with profile exactly `s`. Sub-results are memoized by
/// profile within one call. Throws NotAdmissible, or ConstructionFailed when a
/// step fails verification.
ConstructedHistSnark realize(const OuterCycleProfile& s, const ConstructionOptions& options = {});

struct ScanOptions {
  Limits limits;
  HistSearchOptions hist;
  bool certify = true;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct ScanRecord {
  std::size_t index = 0;  // position in the input stream
  int order = 0;
  std::optional<bool> is_snark;
  bool hist_found = false;
  std::optional<OuterCycleProfile> profile;
  std::optional<std::string> error;
};

struct ScanReport {
  std::vector<ScanRecord> records;
  std::size_t graphs = 0;
  std::size_t errors = 0;
  std::size_t snarks = 0;
  std::size_t snarks_with_hist = 0;
  std::size_t with_hist = 0;
};

/// Hist search (plus snark certification when enabled) over every graph;
/// results come back in input order.
ScanReport scan_for_hists(std::span<const CubicGraph> graphs, const ScanOptions& options = {});

/// As above, decoding one graph6 line per graph; a bad line becomes an error
/// record and the scan continues. Empty lines are skipped.
ScanReport scan_graph6_text(std::string_view text, const ScanOptions& options = {});

std::string scan_record_json(const ScanRecord& record);
std::string scan_summary_table(const ScanReport& report);

}  // namespace snarklab

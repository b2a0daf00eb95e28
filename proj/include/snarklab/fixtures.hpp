#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snarklab/constructions.hpp"
#include "snarklab/graph.hpp"
#include "snarklab/hist.hpp"

namespace snarklab {

/// Raw catalog record. Adjacency is in the parenthesized paper format; the
/// outer cycles are bracketed vertex sequences whose complement is the Hist.
struct FixtureEntry {
  std::string_view name;
  std::string_view adjacency;
  std::string_view outer_cycles;  // empty for Hist-free snarks
  std::vector<int> expected_profile;
  int expected_order = 0;
  bool hist_free = false;
};

std::span<const FixtureEntry> fixture_catalog();

/// A validated catalog entry.
struct Fixture {
  std::string name;
  CubicGraph graph;
  std::optional<Hist> hist;
  std::optional<OuterCycleProfile> profile;
  std::vector<std::vector<Vertex>> declared_cycles;
  bool hist_free = false;
};

/// Looks up by catalog name or alias (T888, T55, ...). Every entry is
/// validated on first use; any mismatch throws FixtureCorrupt.
const Fixture& fixture(std::string_view name);

/// Throws InvalidArgument for a Hist-free fixture.
ConstructedHistSnark fixture_hist_snark(std::string_view name);

std::vector<std::string> fixture_names();

/// The Blanuša snark as a member of {5,5}*: first Hist with that profile in
/// enumeration order. Computed once.
const Hist& blanusa_five_five_hist();

}  // namespace snarklab

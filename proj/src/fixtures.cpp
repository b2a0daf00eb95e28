#include "snarklab/fixtures.hpp"

#include <cctype>
#include <mutex>

#include "snarklab/error.hpp"
#include "snarklab/formats.hpp"

namespace snarklab {

namespace {

// T(5,8), T(6,7) and T(13) are three Hists of one 24-vertex snark.
constexpr std::string_view kT24 =
    "0(12,14,16)1(6,20,22)2(4,19,23)3(7,15,16)4(5,10)5(17,20)6(7,8)7(19)8(9,12)9(11,23)10(14,21)11(18,21)12(13)"
    "13(15,17)14(15)16(17)18(19,22)20(21)22(23)";

const std::vector<FixtureEntry>& entries() {
  static const std::vector<FixtureEntry> catalog = {
      {"P10", "0(1,4,5)1(2,6)2(3,7)3(4,8)4(9)5(7,8)6(8,9)7(9)", "[7,2,3,8,6,9]", {6}, 10, false},
      {"B18",
       "0(2,3,10)1(4,5,17)2(6,7)3(8,9)4(6,9)5(7,8)6(13)7(9)8(16)10(11,12)11(13,15)12(14,16)13(14)14(17)15(16,17)",
       "[12,16,8,5,7,9,4,6,13,14]", {10}, 18, false},
      {"L22",
       "0(1,2,7)1(3,4)2(5,6)3(5,19)4(6,14)5(11)6(20)7(8,15)8(9,10)9(11,12)10(13,14)11(13)12(14,21)13(18)15(16,17)"
       "16(18,19)17(20,21)18(20)19(21)",
       "[13,11,5,3,19,21,12,14,4,6,20,18]", {12}, 22, false},
      {"T(5,5)",
       "0(4,8,12)1(5,6,14)2(4,7,9)3(5,7,8)4(5)6(7,16)8(9)9(11)10(11,15,16)11(13)12(13,15)13(17)14(15,17)16(17)",
       "[10,15,14,17,16][2,7,3,8,9]", {5, 5}, 18, false},
      {"T(5,7)",
       "0(12,14,16)1(5,6,20)2(4,19,21)3(7,15,16)4(5,10)5(17)6(7,8)7(19)8(9,12)9(11,21)10(11,14)11(18)12(13)"
       "13(15,17)14(15)16(17)18(19,20)20(21)",
       "[3,15,13,17,16][10,4,2,21,20,18,11]", {5, 7}, 22, false},
      {"T(5,8)", kT24, "[3,15,13,17,16][10,4,2,23,22,18,11,21]", {5, 8}, 24, false},
      {"T(6,7)", kT24, "[1,6,7,19,18,22][4,5,17,13,15,14,10]", {6, 7}, 24, false},
      {"T(6,8)",
       "0(3,10,22)1(5,13,16)2(4,7,9)3(5,7)4(5,10)6(7,8,24)8(9,12)9(15)10(11)11(13,20)12(17,25)13(25)14(19,21,22)"
       "15(18,21)16(17,24)17(19)18(19,23)20(21,23)22(23)24(25)",
       "[18,19,14,21,20,23][1,5,4,2,7,6,24,16]", {6, 8}, 26, false},
      {"T(7,7)",
       "0(12,14,16)1(6,20,22)2(4,19,23)3(7,15,16)4(5,10)5(20,24)6(7,8)7(19)8(9,12)9(11,23)10(14,25)11(18,21)"
       "12(13)13(15,17)14(15)16(17)17(24)18(19,22)20(21)21(25)22(23)24(25)",
       "[17,13,15,14,10,25,24][1,6,7,19,2,23,22]", {7, 7}, 26, false},
      {"T(8,8)",
       "0(8,10,14)1(5,9,11)2(7,16,18)3(13,19,22)4(5,7,28)5(13)6(7,11,29)8(9,29)9(12)10(11,28)12(13,17)14(15,23)"
       "15(17,18)16(17,20)18(21)19(23,26)20(21,27)21(24)22(25,27)23(25)24(25,26)26(27)28(29)",
       "[12,9,8,29,28,4,5,13][14,15,18,21,24,26,19,23]", {8, 8}, 30, false},
      {"T(13)", kT24, "[2,19,7,3,15,13,17,5,20,21,11,9,23]", {13}, 24, false},
      {"T(8,8,8)",
       "0(3,21,24)1(2,6,24)2(15,25)3(4,25)4(7,26)5(6,8,26)6(27)7(18,27)8(11,28)9(10,14,28)10(23,29)11(12,29)"
       "12(15,30)13(14,16,30)14(31)15(31)16(19,32)17(18,22,32)18(33)19(20,33)20(23,34)21(22,34)22(35)23(35)"
       "24(36)25(36)26(37)27(37)28(38)29(38)30(39)31(39)32(40)33(40)34(41)35(41)36(42)37(42)38(43)39(43)40(44)"
       "41(44)42(45)43(45)44(45)",
       "[0,3,4,7,18,17,22,21][1,2,15,12,11,8,5,6][9,10,23,20,19,16,13,14]", {8, 8, 8}, 46, false},
      {"X1",
       "0(8,12,18)1(5,9,13)2(4,14,20)3(5,7,8)4(5,12)6(7,10,13)7(14)8(15)9(19,22)10(18,24)11(26,34,36)12(16)13(16)"
       "14(17)15(17,19)16(17)18(21)19(21)20(25,36)21(27)22(30,34)23(25,28,31)24(26,37)25(35)26(32)27(29,31)"
       "28(29,30)29(32)30(33)31(33)32(33)34(35)35(37)36(37)",
       "", {}, 38, true},
      {"X2",
       "0(8,12,18)1(5,9,13)2(4,14,20)3(5,7,8)4(5,12)6(7,10,13)7(14)8(15)9(19,22)10(18,24)11(26,34,36)12(16)13(16)"
       "14(17)15(17,19)16(17)18(21)19(21)20(28,34)21(27)22(26,37)23(27,30,32)24(25,36)25(30,35)26(33)27(29)"
       "28(31,32)29(31,33)30(31)32(33)34(35)35(37)36(37)",
       "", {}, 38, true},
  };
  return catalog;
}

// "T(8,8,8)", "T888" and "t888" all normalize to "T888".
std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

Fixture validate(const FixtureEntry& e) {
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::FixtureCorrupt, std::string(e.name) + ": " + why);
  };
  Fixture f;
  f.name = std::string(e.name);
  f.hist_free = e.hist_free;
  try {
    f.graph = parse_paper_adjacency(e.adjacency);
  } catch (const Error& err) {
    fail(err.what());
  }
  if (f.graph.order() != e.expected_order) {
    fail("expected " + std::to_string(e.expected_order) + " vertices, parsed " + std::to_string(f.graph.order()));
  }
  if (e.hist_free) return f;
  try {
    f.declared_cycles = parse_cycle_lists(e.outer_cycles);
    f.hist = hist_from_outer_cycles(f.graph, parse_outer_cycle_declaration(e.outer_cycles, f.graph));
  } catch (const Error& err) {
    fail(err.what());
  }
  f.profile = outer_cycles(f.graph, *f.hist).profile;
  const OuterCycleProfile expected(e.expected_profile);
  if (*f.profile != expected) fail("declared profile " + f.profile->to_string() + ", expected " + expected.to_string());
  return f;
}

const std::vector<Fixture>& validated() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    for (const auto& e : entries()) out.push_back(validate(e));
    return out;
  }();
  return all;
}

}  // namespace

std::span<const FixtureEntry> fixture_catalog() { return entries(); }

const Fixture& fixture(std::string_view name) {
  const std::string key = normalize(name);
  for (const Fixture& f : validated()) {
    if (normalize(f.name) == key) return f;
  }
  throw Error(ErrorCode::UnknownFixture, "no fixture named " + std::string(name));
}

ConstructedHistSnark fixture_hist_snark(std::string_view name) {
  const Fixture& f = fixture(name);
  if (!f.hist) throw Error(ErrorCode::InvalidArgument, f.name + " has no Hist");
  return wrap_hist_snark(f.name, f.graph, *f.hist);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.emplace_back(e.name);
  return out;
}

const Hist& blanusa_five_five_hist() {
  static const Hist hist = [] {
    const CubicGraph& g = fixture("B18").graph;
    for (const Hist& h : enumerate_hists(g, 10000)) {
      if (outer_cycles(g, h).profile == OuterCycleProfile{5, 5}) return h;
    }
    throw Error(ErrorCode::FixtureCorrupt, "B18 has no Hist with profile {5,5}");
  }();
  return hist;
}

}  // namespace snarklab

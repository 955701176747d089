#include <stdexcept>

#include "grc/search.hpp"

// Stored reproduction data: the (I_12|A) right halves of the displayed
// order-24 generator matrices and the built-in candidate-set definitions.

namespace grc {

namespace {

// clang-format off
constexpr const char* kA_C3D8 =
    "011111001100"
    "111010011001"
    "110100110011"
    "101101100110"
    "110001111100"
    "100111101001"
    "001111010011"
    "011010110110"
    "110011000111"
    "100110011110"
    "001100111101"
    "011001101011";

constexpr const char* kA_C2A4 =
    "101101010011"
    "011110100011"
    "111001011100"
    "110110101100"
    "010111010110"
    "101011101001"
    "010101111001"
    "101010110110"
    "001101101110"
    "001110011101"
    "110010011011"
    "110001100111";

constexpr const char* kA_G24_8 =
    "010110110011"
    "010011101110"
    "101010111010"
    "001111101001"
    "110111000101"
    "111001100011"
    "110000011111"
    "101101001110"
    "110101111000"
    "001011010111"
    "101100110101"
    "011110011100";

constexpr const char* kA_R1A4_IMAGE =
    "101100101101"
    "111001101010"
    "111110000110"
    "101010011011"
    "100111100011"
    "110011001101"
    "110101110100"
    "011010111100"
    "010111011010"
    "001111010101"
    "011100110011"
    "000001111111";
// clang-format on

LinearCode identity_a_code(const char* bits) {
  std::vector<std::vector<int>> rows(12, std::vector<int>(24, 0));
  for (int i = 0; i < 12; ++i) {
    rows[i][i] = 1;
    for (int j = 0; j < 12; ++j) rows[i][12 + j] = bits[i * 12 + j] - '0';
  }
  return code_from_binary_rows(24, rows);
}

GroupPtr golay_group(const std::string& name) {
  if (name == "golay_c3d8")
    return reorder_cyclic_dihedral(
        make_direct_product(make_cyclic(3, "z"), make_dihedral(8)), 3, 8);
  if (name == "golay_c2a4") return make_direct_product(make_cyclic(2, "x"), make_named("a4"));
  if (name == "golay_g24_8") return make_named("g24_8");
  if (name == "golay_sl23") return make_named("sl23");
  if (name == "golay_c22d6")
    return make_direct_product(make_direct_product(make_cyclic(2, "z"), make_cyclic(2, "w")),
                               make_dihedral(6));
  throw std::invalid_argument("unknown golay search '" + name + "'");
}

SearchSpec symmetric_golay_spec(const std::string& name) {
  SearchSpec spec;
  spec.name = name;
  spec.ring = RingSpec{0};
  spec.group = golay_group(name);
  for (const auto& orbit : inversion_orbits(*spec.group)) {
    std::vector<BitSlot> tie;
    for (int pos : orbit) tie.push_back({pos, 0});
    spec.ties.push_back(std::move(tie));
  }
  spec.filters = {{FilterKind::rank_equals, 12}, {FilterKind::min_distance_at_least, 8}};
  return spec;
}

SearchSpec csd_census_spec(const std::string& name, int s) {
  // alpha_{(h^i, rotation^j)} = 1 exactly at the identity; reflection
  // coefficients free. Requires the csd coordinate order: rotation-type
  // coordinates are 0 .. s*k-1 with the identity at 0.
  SearchSpec spec;
  spec.name = name;
  spec.ring = RingSpec{0};
  spec.group = reorder_cyclic_dihedral(
      make_direct_product(make_cyclic(s, "h"), make_dihedral(8)), s, 8);
  const int half = spec.group->order() / 2;
  spec.fixed.push_back({{0, 0}, 1});
  for (int pos = 1; pos < half; ++pos) spec.fixed.push_back({{pos, 0}, 0});
  for (int pos = half; pos < spec.group->order(); ++pos) spec.ties.push_back({{pos, 0}});
  spec.filters = {{FilterKind::rank_equals, half}};
  spec.census_classify = true;
  return spec;
}

}  // namespace

std::vector<std::string> builtin_search_names() {
  return {"golay_c3d8", "golay_c2a4", "golay_g24_8", "golay_sl23", "golay_c22d6",
          "census_c3d8", "census_c4d8"};
}

SearchSpec builtin_search(const std::string& name) {
  if (name.rfind("golay_", 0) == 0) return symmetric_golay_spec(name);
  if (name == "census_c3d8") return csd_census_spec(name, 3);
  if (name == "census_c4d8") return csd_census_spec(name, 4);
  throw std::invalid_argument("unknown search '" + name + "'");
}

ExpectedCensus expected_results(const std::string& name) {
  ExpectedCensus e;
  if (name == "golay_c3d8") { e.final_count = 128; return e; }
  if (name == "golay_c2a4") { e.final_count = 384; return e; }
  if (name == "golay_g24_8") { e.final_count = 576; return e; }
  if (name == "golay_sl23") { e.final_count = 0; return e; }
  if (name == "golay_c22d6") { e.final_count = 0; return e; }
  if (name == "census_c3d8") {
    e.rank_count = 256;
    e.sd_count = 64;
    e.fsd_count = 192;
    e.distance_histograms["fsd_not_self_dual"] = {{4, 112}, {6, 80}};
    return e;
  }
  if (name == "census_c4d8") {
    e.rank_count = 2048;
    e.sd_count = 512;
    e.fsd_count = 1536;
    e.distance_histograms["fsd_not_self_dual"] = {{4, 896}, {6, 192}, {8, 448}};
    return e;
  }
  throw std::invalid_argument("no expected results for '" + name + "'");
}

bool report_matches_expected(const SearchReport& report, const ExpectedCensus& expected) {
  auto stage = [&](const std::string& name) -> std::optional<std::uint64_t> {
    for (const auto& s : report.stages)
      if (s.name == name) return s.count;
    return std::nullopt;
  };
  if (expected.final_count && report.final_count != *expected.final_count) return false;
  if (expected.rank_count) {
    bool found = false;
    for (const auto& s : report.stages)
      if (s.name.rfind("rank=", 0) == 0) {
        found = true;
        if (s.count != *expected.rank_count) return false;
      }
    if (!found) return false;
  }
  if (expected.sd_count && stage("self_dual") != expected.sd_count) return false;
  if (expected.fsd_count && stage("fsd_not_self_dual") != expected.fsd_count) return false;
  for (const auto& [cls, hist] : expected.distance_histograms) {
    auto it = report.distance_histograms.find(cls);
    if (it == report.distance_histograms.end() || it->second != hist) return false;
  }
  return true;
}

std::vector<std::string> displayed_code_names() {
  return {"c3d8", "c2a4", "g24_8", "r1a4_image"};
}

LinearCode displayed_code(const std::string& name) {
  if (name == "c3d8") return identity_a_code(kA_C3D8);
  if (name == "c2a4") return identity_a_code(kA_C2A4);
  if (name == "g24_8") return identity_a_code(kA_G24_8);
  if (name == "r1a4_image") return identity_a_code(kA_R1A4_IMAGE);
  throw std::invalid_argument("unknown displayed matrix '" + name + "'");
}

DisplayedCheck verify_displayed_matrix(const std::string& name) {
  const LinearCode c = displayed_code(name);
  DisplayedCheck out;
  out.name = name;
  out.length = c.length;
  out.rank = c.binary_rank;
  out.distance = min_distance(c, Metric::hamming).value_or(0);
  out.self_dual = is_self_dual(c);
  out.type_ii = out.self_dual && is_type_ii(c);
  out.ok = out.length == 24 && out.rank == 12 && out.distance == 8 && out.self_dual && out.type_ii;
  return out;
}

}  // namespace grc

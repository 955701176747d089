#pragma once

// Exhaustive enumeration over parameterized candidate sets of group-ring
// elements, with ordered filters and deterministic parallel aggregation.
// Reproduces every census reported for the order-24 groups and the
// cyclic-cross-dihedral pattern families.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grc/code.hpp"
#include "grc/group_ring.hpp"

namespace grc {

constexpr int kMaxFreeBits = 24;

// One binary degree of freedom of a candidate element: the monomial bit
// `monomial` of the ring coefficient at group coordinate `coord`.
struct BitSlot {
  int coord = 0;
  int monomial = 0;  // subset index into the 2^k monomials
  friend bool operator==(const BitSlot&, const BitSlot&) = default;
};

enum class FilterKind {
  symmetry,               // sigma(v) = sigma(v)^T
  rank_equals,            // binary rank == value
  min_distance_at_least,  // no nonzero word of weight < value (early exit)
  min_distance_equals,    // exact minimum distance == value
  self_dual,
  type_ii,
};

struct Filter {
  FilterKind kind{};
  int value = 0;
};

struct SearchSpec {
  std::string name;  // empty for ad-hoc specs
  RingSpec ring;
  GroupPtr group;
  std::vector<std::vector<BitSlot>> ties;  // one free bit per tie group
  std::vector<std::pair<BitSlot, int>> fixed;
  std::vector<Filter> filters;
  // Census mode: after the filter chain, split survivors into self-dual vs
  // formally-self-dual-not-self-dual (FSD verified against the dual's
  // Hamming enumerator) and histogram exact distances per class.
  bool census_classify = false;
  int report_witnesses = 4;

  std::uint64_t candidate_count() const { return std::uint64_t{1} << ties.size(); }
  // Reconstructs the candidate element for a given index.
  GroupRingElement element_at(std::uint64_t index) const;
};

struct StageCount {
  std::string name;
  std::uint64_t count = 0;
};

struct SearchReport {
  std::string name;
  std::uint64_t total_candidates = 0;
  std::vector<StageCount> stages;
  // class name ("all", "self_dual", "fsd_not_self_dual") -> distance -> count
  std::map<std::string, std::map<int, std::uint64_t>> distance_histograms;
  std::vector<std::string> witnesses;  // canonical element texts, smallest indices
  std::uint64_t final_count = 0;
  double wall_ms = 0;
  int workers = 1;
};

// Deterministic regardless of worker count. Throws if the free-bit count
// exceeds kMaxFreeBits or the ring/group sizes leave the fast path
// (binary image must fit 64 bits).
SearchReport run_search(const SearchSpec& spec, int workers = 0);

// Built-in reproductions. golay_*: all symmetric elements of F2 G filtered to
// rank 12 and distance >= 8. census_*: the fixed rotation-part pattern with
// free reflection coefficients, classified by self-duality and distance.
//   golay_c3d8, golay_c2a4, golay_g24_8, golay_sl23, golay_c22d6,
//   census_c3d8, census_c4d8
SearchSpec builtin_search(const std::string& name);
std::vector<std::string> builtin_search_names();

// Expected final counts/breakdowns for the built-ins; run_search callers can
// compare (the CLI exit code contract depends on it).
struct ExpectedCensus {
  std::optional<std::uint64_t> final_count;
  std::map<std::string, std::map<int, std::uint64_t>> distance_histograms;
  std::optional<std::uint64_t> rank_count, sd_count, fsd_count;
};
ExpectedCensus expected_results(const std::string& builtin_name);
bool report_matches_expected(const SearchReport& report, const ExpectedCensus& expected);

// The three (I_12|A) matrices transcribed from the order-24 constructions,
// plus the binary image of the R_1 A_4 construction.
//   c3d8, c2a4, g24_8, r1a4_image
LinearCode displayed_code(const std::string& name);
std::vector<std::string> displayed_code_names();
struct DisplayedCheck {
  std::string name;
  int length = 0, rank = 0, distance = 0;
  bool self_dual = false, type_ii = false;
  bool ok = false;  // [24,12,8], self-dual, type II
};
DisplayedCheck verify_displayed_matrix(const std::string& name);

// JSON (de)serialization for pattern files and reports.
std::string search_spec_to_json(const SearchSpec& spec);
SearchSpec search_spec_from_json(const std::string& text);
std::string search_report_to_json(const SearchReport& report);

}  // namespace grc

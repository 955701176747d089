#pragma once

// Code report document: the analysis bundle the CLI prints for a constructed
// code, serializable as JSON with a stable schema.

#include <optional>
#include <string>

#include "grc/code.hpp"

namespace grc {

struct CodeReport {
  std::string ring;     // "f2" or "r<k>"
  std::string group;    // ordering tag, empty when none
  std::string element;  // canonical element text, empty when none
  int length = 0;
  int image_length = 0;
  int log2_size = 0;
  std::optional<int> min_distance_hamming;  // absent for the zero code
  std::optional<int> min_distance_lee;      // only for R_k, k >= 1
  bool self_orthogonal = false;
  bool self_dual = false;
  bool formally_self_dual = false;
  bool type_ii = false;  // of the binary code / Gray image
  std::string sigma_shape;                       // present when built from sigma(v)
  std::vector<std::pair<int, std::uint64_t>> weight_enumerator;  // sorted
  std::string weight_kind;                        // "hamming" or "lee"
  std::vector<std::string> gray_generators;       // optional 0/1 rows

  std::string to_json() const;
  std::string to_text() const;
};

struct ReportOptions {
  bool with_enumerator = true;
  bool with_gray_generators = false;
  bool with_fsd = true;  // FSD needs dual + two enumerations
  std::string sigma_shape;
  std::string element_text;
};

// Analyzes a code (distances, predicates, enumerator) subject to the
// enumeration bound; fields that would exceed it are left unset.
CodeReport analyze_code(const LinearCode& c, const ReportOptions& options = {});

}  // namespace grc

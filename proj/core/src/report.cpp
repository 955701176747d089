#include "grc/report.hpp"

#include <sstream>

#include "json.hpp"

namespace grc {

CodeReport analyze_code(const LinearCode& c, const ReportOptions& options) {
  CodeReport r;
  r.ring = c.ring.is_f2() ? "f2" : "r" + std::to_string(c.ring.k);
  r.group = c.group ? c.group->ordering_tag() : "";
  r.element = options.element_text;
  r.length = c.length;
  r.image_length = c.image_length();
  r.log2_size = c.binary_rank;
  r.sigma_shape = options.sigma_shape;
  r.self_orthogonal = is_self_orthogonal(c);
  r.self_dual = is_self_dual(c);

  const bool enumerable = c.binary_rank <= kEnumerationRankBound;
  if (enumerable) {
    r.min_distance_hamming = min_distance(c, Metric::hamming);
    if (!c.ring.is_f2()) r.min_distance_lee = min_distance(c, Metric::lee);
    const LinearCode binary = c.ring.is_f2() ? c : gray_image(c);
    r.type_ii = r.self_dual && is_type_ii(binary);
    if (options.with_fsd) r.formally_self_dual = is_formally_self_dual(c, WeightKind::hamming);
    if (options.with_enumerator) {
      const WeightEnumerator we = weight_enumerator(c, WeightKind::hamming);
      r.weight_kind = "hamming";
      for (const auto& [w, count] : we.by_weight) r.weight_enumerator.emplace_back(w, count);
    }
  }
  if (options.with_gray_generators) {
    const BitMatrix& b = c.basis;
    for (int i = 0; i < b.rows(); ++i) {
      std::string row;
      for (int j = 0; j < b.cols(); ++j) row += b.get(i, j) ? '1' : '0';
      r.gray_generators.push_back(std::move(row));
    }
  }
  return r;
}

std::string CodeReport::to_json() const {
  nlohmann::json j;
  j["ring"] = ring;
  if (!group.empty()) j["group"] = group;
  if (!element.empty()) j["element"] = element;
  j["length"] = length;
  j["image_length"] = image_length;
  j["log2_size"] = log2_size;
  nlohmann::json dist;
  dist["hamming"] = min_distance_hamming ? nlohmann::json(*min_distance_hamming)
                                         : nlohmann::json("undefined");
  if (min_distance_lee) dist["lee"] = *min_distance_lee;
  j["min_distance"] = dist;
  j["flags"] = {{"self_orthogonal", self_orthogonal},
                {"self_dual", self_dual},
                {"formally_self_dual", formally_self_dual},
                {"type_ii", type_ii}};
  if (!sigma_shape.empty()) j["sigma_shape"] = sigma_shape;
  if (!weight_enumerator.empty()) {
    nlohmann::json we = nlohmann::json::array();
    for (const auto& [w, count] : weight_enumerator) we.push_back({w, count});
    j["weight_enumerator"] = we;
    j["weight_kind"] = weight_kind;
  }
  if (!gray_generators.empty()) j["gray_generators"] = gray_generators;
  return j.dump(2);
}

std::string CodeReport::to_text() const {
  std::ostringstream out;
  out << "ring: " << ring << "\n";
  if (!group.empty()) out << "group: " << group << "\n";
  if (!element.empty()) out << "element: " << element << "\n";
  out << "length: " << length;
  if (image_length != length) out << "  (binary image length " << image_length << ")";
  out << "\n";
  out << "log2|C|: " << log2_size << "\n";
  out << "min distance (hamming): ";
  if (min_distance_hamming) out << *min_distance_hamming; else out << "undefined";
  out << "\n";
  if (min_distance_lee) out << "min distance (lee): " << *min_distance_lee << "\n";
  if (!sigma_shape.empty()) out << "sigma shape: " << sigma_shape << "\n";
  out << "self-orthogonal: " << (self_orthogonal ? "yes" : "no")
      << "   self-dual: " << (self_dual ? "yes" : "no")
      << "   formally self-dual: " << (formally_self_dual ? "yes" : "no")
      << "   type II: " << (type_ii ? "yes" : "no") << "\n";
  if (!weight_enumerator.empty()) {
    out << "weight enumerator (" << weight_kind << "):";
    for (const auto& [w, count] : weight_enumerator) out << " " << w << ":" << count;
    out << "\n";
  }
  for (const auto& row : gray_generators) out << row << "\n";
  return out.str();
}

}  // namespace grc

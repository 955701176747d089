#include "grc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace grc {

GroupRingElement SearchSpec::element_at(std::uint64_t index) const {
  GroupRingElement v = GroupRingElement::zero(ring, group);
  auto flip = [&](const BitSlot& s) {
    v.coeffs[s.coord] = ring_add(
        v.coeffs[s.coord], RingValue(ring, static_cast<std::uint16_t>(1u << s.monomial)));
  };
  for (const auto& [slot, value] : fixed)
    if (value) flip(slot);
  for (size_t t = 0; t < ties.size(); ++t)
    if ((index >> t) & 1)
      for (const auto& slot : ties[t]) flip(slot);
  return v;
}

namespace {

int default_workers() {
  if (const char* env = std::getenv("GRC_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Per-candidate state on the binary fast path. The Gray image of the
// monomial expansion occupies `nrows` = n * 2^k rows of `ncols` = n * 2^k
// bits; both fit in 64 for everything in scope.
struct Kernel {
  const SearchSpec& spec;
  int n, mono, nrows, ncols;
  std::vector<int> inv_perm;                    // coordinate inverse map
  std::vector<std::uint64_t> base;              // rows from fixed slots
  std::vector<std::vector<std::uint64_t>> tie_delta;  // [tie][row]
  std::vector<std::uint64_t> sym_mask;          // per tie: coefficient-slot bits
  std::vector<std::uint64_t> fixed_bits;        // slot bits of the fixed part

  explicit Kernel(const SearchSpec& s) : spec(s) {
    const auto& g = *s.group;
    n = g.order();
    mono = s.ring.monomials();
    nrows = n * mono;
    ncols = n * mono;
    if (ncols > 64)
      throw std::invalid_argument("search fast path requires n * 2^k <= 64");
    if (s.ties.size() > static_cast<size_t>(kMaxFreeBits))
      throw std::invalid_argument("candidate space too large");

    inv_perm.resize(n);
    for (int i = 0; i < n; ++i) inv_perm[i] = g.inv(i);

    // row (i, S): the Gray image of u_S * (g_i * v). Coefficient slot
    // (c, m): toggling it XORs gray(u_S * u_m) into slice j of row (i, S)
    // for every column j with table[inv i][j] = c.
    auto slot_delta = [&](int row_i, int S, int c, int m) {
      const RingValue us(s.ring, static_cast<std::uint16_t>(1u << S));
      const RingValue um(s.ring, static_cast<std::uint16_t>(1u << m));
      const std::uint64_t img = gray_map(ring_mul(us, um));
      std::uint64_t delta = 0;
      if (img) {
        const int gi = inv_perm[row_i];
        for (int j = 0; j < n; ++j)
          if (g.mul(gi, j) == c) delta |= img << (j * mono);
      }
      return delta;
    };

    base.assign(nrows, 0);
    fixed_bits.assign(1, 0);
    for (const auto& [slot, value] : s.fixed) {
      if (!value) continue;
      fixed_bits[0] ^= std::uint64_t{1} << (slot.coord * mono + slot.monomial);
      for (int i = 0; i < n; ++i)
        for (int S = 0; S < mono; ++S) base[i * mono + S] ^= slot_delta(i, S, slot.coord, slot.monomial);
    }
    tie_delta.resize(s.ties.size());
    sym_mask.assign(s.ties.size(), 0);
    for (size_t t = 0; t < s.ties.size(); ++t) {
      tie_delta[t].assign(nrows, 0);
      for (const auto& slot : s.ties[t]) {
        sym_mask[t] ^= std::uint64_t{1} << (slot.coord * mono + slot.monomial);
        for (int i = 0; i < n; ++i)
          for (int S = 0; S < mono; ++S)
            tie_delta[t][i * mono + S] ^= slot_delta(i, S, slot.coord, slot.monomial);
      }
    }
  }

  bool coeffs_symmetric(std::uint64_t coeff_bits) const {
    for (int c = 0; c < n; ++c) {
      const int ic = inv_perm[c];
      if (ic < c) continue;
      const std::uint64_t a = (coeff_bits >> (c * mono)) & ((std::uint64_t{1} << mono) - 1);
      const std::uint64_t b = (coeff_bits >> (ic * mono)) & ((std::uint64_t{1} << mono) - 1);
      if (a != b) return false;
    }
    return true;
  }
};

struct ClassTally {
  std::uint64_t count = 0;
  std::map<int, std::uint64_t> dist_hist;
};

struct WorkerResult {
  std::vector<std::uint64_t> stage_counts;
  std::uint64_t final_count = 0;
  ClassTally sd, fsd, all;
  std::vector<std::uint64_t> witness_indices;
};

// Exact minimum weight of the span of `basis[0..r)`; early-exits below
// `floor` (returns something < floor). Uses the ring Hamming weight.
int span_min_weight(const std::uint64_t* basis, int r, int mono, std::uint64_t slice_mask,
                    int floor_bound, int ncols) {
  if (r == 0) return ncols + 1;
  int best = ncols + 1;
  std::uint64_t cur = 0;
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t m = 1; m < total; ++m) {
    cur ^= basis[std::countr_zero(m)];
    std::uint64_t x = cur;
    for (int s = 1; s < mono; s <<= 1) x |= x >> s;
    const int w = std::popcount(x & slice_mask);
    if (w < best) {
      best = w;
      if (best < floor_bound) return best;
    }
  }
  return best;
}

void weight_histogram(const std::uint64_t* basis, int r, int mono, std::uint64_t slice_mask,
                      std::vector<std::uint64_t>& hist) {
  std::fill(hist.begin(), hist.end(), 0);
  hist[0] = 1;
  std::uint64_t cur = 0;
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t m = 1; m < total; ++m) {
    cur ^= basis[std::countr_zero(m)];
    std::uint64_t x = cur;
    for (int s = 1; s < mono; s <<= 1) x |= x >> s;
    ++hist[std::popcount(x & slice_mask)];
  }
}

void run_range(const Kernel& kernel, std::uint64_t lo, std::uint64_t hi, int witness_cap,
               WorkerResult& out) {
  const SearchSpec& spec = kernel.spec;
  const int nrows = kernel.nrows;
  const int ncols = kernel.ncols;
  const int half_rank = ncols / 2;
  const int mono = kernel.mono;
  std::uint64_t slice_mask = 0;
  for (int b = 0; b < ncols; b += mono) slice_mask |= std::uint64_t{1} << b;

  out.stage_counts.assign(spec.filters.size() + 1, 0);

  std::vector<std::uint64_t> rows(kernel.base);
  std::uint64_t coeff_bits = kernel.fixed_bits[0];
  const std::uint64_t start_code = lo ^ (lo >> 1);
  for (size_t t = 0; t < spec.ties.size(); ++t) {
    if ((start_code >> t) & 1) {
      for (int i = 0; i < nrows; ++i) rows[i] ^= kernel.tie_delta[t][i];
      coeff_bits ^= kernel.sym_mask[t];
    }
  }

  std::vector<std::uint64_t> scratch(nrows), basis(ncols), dual_basis, hist(ncols + 1),
      dual_hist(ncols + 1);

  for (std::uint64_t g = lo; g < hi; ++g) {
    if (g != lo) {
      const int t = std::countr_zero(g);
      for (int i = 0; i < nrows; ++i) rows[i] ^= kernel.tie_delta[t][i];
      coeff_bits ^= kernel.sym_mask[t];
    }
    const std::uint64_t index = g ^ (g >> 1);

    ++out.stage_counts[0];
    int rank = -1;
    bool pass = true;
    for (size_t f = 0; f < spec.filters.size() && pass; ++f) {
      const Filter& filt = spec.filters[f];
      switch (filt.kind) {
        case FilterKind::symmetry:
          pass = kernel.coeffs_symmetric(coeff_bits);
          break;
        case FilterKind::rank_equals:
          if (rank < 0) rank = echelon64(rows.data(), nrows, basis.data());
          pass = rank == filt.value;
          break;
        case FilterKind::min_distance_at_least: {
          if (rank < 0) rank = echelon64(rows.data(), nrows, basis.data());
          pass = span_min_weight(basis.data(), rank, mono, slice_mask, filt.value, ncols) >=
                 filt.value;
          break;
        }
        case FilterKind::min_distance_equals: {
          if (rank < 0) rank = echelon64(rows.data(), nrows, basis.data());
          pass = span_min_weight(basis.data(), rank, mono, slice_mask, filt.value, ncols) ==
                 filt.value;
          break;
        }
        case FilterKind::self_dual: {
          if (rank < 0) rank = echelon64(rows.data(), nrows, basis.data());
          pass = 2 * rank == ncols;
          for (int i = 0; i < nrows && pass; ++i)
            for (int j = i; j < nrows && pass; ++j)
              if (std::popcount(rows[i] & rows[j]) & 1) pass = false;
          break;
        }
        case FilterKind::type_ii: {
          if (rank < 0) rank = echelon64(rows.data(), nrows, basis.data());
          pass = true;
          std::uint64_t cur = 0;
          const std::uint64_t total = std::uint64_t{1} << rank;
          for (std::uint64_t m = 1; m < total && pass; ++m) {
            cur ^= basis[std::countr_zero(m)];
            if (std::popcount(cur) % 4 != 0) pass = false;
          }
          break;
        }
      }
      if (pass) ++out.stage_counts[f + 1];
    }
    if (!pass) continue;

    ++out.final_count;
    if (static_cast<int>(out.witness_indices.size()) < witness_cap)
      out.witness_indices.push_back(index);

    if (!spec.census_classify) continue;

    if (rank < 0) rank = echelon64(rows.data(), nrows, basis.data());
    // self-orthogonality over F2 (census classification is binary-only)
    bool sd = 2 * rank == ncols;
    for (int i = 0; i < nrows && sd; ++i)
      for (int j = i; j < nrows && sd; ++j)
        if (std::popcount(rows[i] & rows[j]) & 1) sd = false;

    weight_histogram(basis.data(), rank, mono, slice_mask, hist);
    int dmin = 0;
    for (int w = 1; w <= ncols; ++w)
      if (hist[w]) { dmin = w; break; }

    ClassTally* cls = &out.all;
    if (sd) {
      cls = &out.sd;
    } else {
      // verify formal self-duality: the dual must share the Hamming enumerator
      scratch = rows;
      dual_basis.clear();
      const int nullity = nullspace64(scratch.data(), nrows, ncols, dual_basis);
      weight_histogram(dual_basis.data(), nullity, mono, slice_mask, dual_hist);
      if (hist == dual_hist) cls = &out.fsd;
    }
    ++cls->count;
    ++cls->dist_hist[dmin];
  }
}

}  // namespace

SearchReport run_search(const SearchSpec& spec, int workers) {
  if (spec.ties.size() > static_cast<size_t>(kMaxFreeBits))
    throw std::invalid_argument("candidate space too large (> 2^24)");
  if (spec.census_classify && !spec.ring.is_f2())
    throw std::invalid_argument("census classification is implemented for binary searches");

  const auto t0 = std::chrono::steady_clock::now();
  const Kernel kernel(spec);
  const std::uint64_t total = spec.candidate_count();
  int nworkers = workers > 0 ? workers : default_workers();
  nworkers = static_cast<int>(std::min<std::uint64_t>(nworkers, total));

  std::vector<WorkerResult> results(nworkers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + nworkers - 1) / nworkers;
  for (int w = 0; w < nworkers; ++w) {
    const std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
    threads.emplace_back([&kernel, lo, hi, &spec, &results, w] {
      run_range(kernel, lo, hi, spec.report_witnesses, results[w]);
    });
  }
  for (auto& t : threads) t.join();

  SearchReport report;
  report.name = spec.name;
  report.total_candidates = total;
  report.workers = nworkers;

  std::vector<std::uint64_t> stage_counts(spec.filters.size() + 1, 0);
  ClassTally sd, fsd, all;
  std::vector<std::uint64_t> witness_indices;
  for (const auto& r : results) {
    for (size_t i = 0; i < stage_counts.size() && i < r.stage_counts.size(); ++i)
      stage_counts[i] += r.stage_counts[i];
    report.final_count += r.final_count;
    auto merge = [](ClassTally& dst, const ClassTally& src) {
      dst.count += src.count;
      for (const auto& [d, c] : src.dist_hist) dst.dist_hist[d] += c;
    };
    merge(sd, r.sd);
    merge(fsd, r.fsd);
    merge(all, r.all);
    for (auto idx : r.witness_indices)
      if (static_cast<int>(witness_indices.size()) < spec.report_witnesses)
        witness_indices.push_back(idx);
  }

  report.stages.push_back({"candidates", stage_counts[0]});
  for (size_t f = 0; f < spec.filters.size(); ++f) {
    std::string name;
    switch (spec.filters[f].kind) {
      case FilterKind::symmetry: name = "symmetric"; break;
      case FilterKind::rank_equals: name = "rank=" + std::to_string(spec.filters[f].value); break;
      case FilterKind::min_distance_at_least:
        name = "dist>=" + std::to_string(spec.filters[f].value); break;
      case FilterKind::min_distance_equals:
        name = "dist=" + std::to_string(spec.filters[f].value); break;
      case FilterKind::self_dual: name = "self_dual"; break;
      case FilterKind::type_ii: name = "type_ii"; break;
    }
    report.stages.push_back({name, stage_counts[f + 1]});
  }
  if (spec.census_classify) {
    report.stages.push_back({"self_dual", sd.count});
    report.stages.push_back({"fsd_not_self_dual", fsd.count});
    report.distance_histograms["self_dual"] = sd.dist_hist;
    report.distance_histograms["fsd_not_self_dual"] = fsd.dist_hist;
    if (all.count) report.distance_histograms["unclassified"] = all.dist_hist;
  }

  for (auto idx : witness_indices) report.witnesses.push_back(to_string(spec.element_at(idx)));

  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// ---- JSON ------------------------------------------------------------------

namespace {

nlohmann::json slot_json(const BitSlot& s) {
  return nlohmann::json{{"coord", s.coord}, {"monomial", s.monomial}};
}
BitSlot slot_from(const nlohmann::json& j) {
  return BitSlot{j.at("coord").get<int>(), j.value("monomial", 0)};
}

std::string filter_kind_name(FilterKind k) {
  switch (k) {
    case FilterKind::symmetry: return "symmetry";
    case FilterKind::rank_equals: return "rank_equals";
    case FilterKind::min_distance_at_least: return "min_distance_at_least";
    case FilterKind::min_distance_equals: return "min_distance_equals";
    case FilterKind::self_dual: return "self_dual";
    case FilterKind::type_ii: return "type_ii";
  }
  return "?";
}

FilterKind filter_kind_from(const std::string& s) {
  if (s == "symmetry") return FilterKind::symmetry;
  if (s == "rank_equals") return FilterKind::rank_equals;
  if (s == "min_distance_at_least") return FilterKind::min_distance_at_least;
  if (s == "min_distance_equals") return FilterKind::min_distance_equals;
  if (s == "self_dual") return FilterKind::self_dual;
  if (s == "type_ii") return FilterKind::type_ii;
  throw std::invalid_argument("unknown filter kind '" + s + "'");
}

}  // namespace

std::string search_spec_to_json(const SearchSpec& spec) {
  nlohmann::json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["ring"] = spec.ring.is_f2() ? "f2" : ("r" + std::to_string(spec.ring.k));
  j["group"] = spec.group->ordering_tag();
  nlohmann::json ties = nlohmann::json::array();
  for (const auto& tie : spec.ties) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& s : tie) t.push_back(slot_json(s));
    ties.push_back(t);
  }
  j["ties"] = ties;
  nlohmann::json fixed = nlohmann::json::array();
  for (const auto& [slot, value] : spec.fixed) {
    auto s = slot_json(slot);
    s["value"] = value;
    fixed.push_back(s);
  }
  j["fixed"] = fixed;
  nlohmann::json filters = nlohmann::json::array();
  for (const auto& f : spec.filters)
    filters.push_back({{"kind", filter_kind_name(f.kind)}, {"value", f.value}});
  j["filters"] = filters;
  j["census_classify"] = spec.census_classify;
  j["witnesses"] = spec.report_witnesses;
  return j.dump(2);
}

SearchSpec search_spec_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  SearchSpec spec;
  spec.name = j.value("name", "");
  spec.ring = parse_ring_spec(j.at("ring").get<std::string>());
  spec.group = parse_group_descriptor(j.at("group").get<std::string>());
  for (const auto& tie : j.at("ties")) {
    std::vector<BitSlot> slots;
    for (const auto& s : tie) slots.push_back(slot_from(s));
    spec.ties.push_back(std::move(slots));
  }
  if (j.contains("fixed"))
    for (const auto& s : j.at("fixed"))
      spec.fixed.emplace_back(slot_from(s), s.value("value", 1));
  if (j.contains("filters"))
    for (const auto& f : j.at("filters"))
      spec.filters.push_back({filter_kind_from(f.at("kind").get<std::string>()), f.value("value", 0)});
  spec.census_classify = j.value("census_classify", false);
  spec.report_witnesses = j.value("witnesses", 4);
  return spec;
}

std::string search_report_to_json(const SearchReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["total_candidates"] = report.total_candidates;
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : report.stages) stages.push_back({{"name", s.name}, {"count", s.count}});
  j["stages"] = stages;
  j["final_count"] = report.final_count;
  nlohmann::json hists;
  for (const auto& [cls, hist] : report.distance_histograms) {
    nlohmann::json h;
    for (const auto& [d, c] : hist) h[std::to_string(d)] = c;
    hists[cls] = h;
  }
  j["distance_histograms"] = hists;
  j["witnesses"] = report.witnesses;
  j["wall_ms"] = report.wall_ms;
  j["workers"] = report.workers;
  return j.dump(2);
}

}  // namespace grc

// grc: construct codes from group-ring elements, check duality predicates,
// run the named reproduction searches, and verify the structural property
// suites. Exit codes: 0 success / counts match, 1 verification mismatch,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "grc/report.hpp"
#include "grc/search.hpp"
#include "grc/verify.hpp"

namespace {

struct CommonOpts {
  std::string ring = "f2";
  std::string group;
  std::string element;
  bool json = false;
  bool gray_rows = false;
  bool no_enumerator = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_element = true) {
  cmd->add_option("--ring", o.ring, "coefficient ring: f2 or r<k> (k in 1..4)");
  cmd->add_option("--group", o.group, "group descriptor, e.g. d8, m16, 'c3 x d8@csd', table:file.json")
      ->required();
  if (need_element)
    cmd->add_option("--element", o.element, "group-ring element expression")->required();
  cmd->add_flag("--json", o.json, "emit JSON instead of text");
  cmd->add_flag("--gray-rows", o.gray_rows, "include the binary basis rows");
  cmd->add_flag("--no-enumerator", o.no_enumerator, "skip the weight enumerator");
}

struct Built {
  grc::GroupRingElement v;
  grc::LinearCode code;
  std::string shape;
};

Built build_code(const CommonOpts& o) {
  const grc::RingSpec ring = grc::parse_ring_spec(o.ring);
  const grc::GroupPtr group = grc::parse_group_descriptor(o.group);
  grc::GroupRingElement v = grc::parse_element(o.element, ring, group);
  const grc::SigmaMatrix m = grc::sigma(v);
  return Built{std::move(v), grc::code_from_sigma(m), grc::matrix_shape(m).describe()};
}

int emit_report(const grc::LinearCode& code, const CommonOpts& o, const std::string& element_text,
                const std::string& shape) {
  grc::ReportOptions opts;
  opts.with_enumerator = !o.no_enumerator;
  opts.with_gray_generators = o.gray_rows;
  opts.with_fsd = code.binary_rank <= grc::kEnumerationRankBound &&
                  code.image_length() - code.binary_rank <= grc::kEnumerationRankBound;
  opts.sigma_shape = shape;
  opts.element_text = element_text;
  const grc::CodeReport report = grc::analyze_code(code, opts);
  std::cout << (o.json ? report.to_json() : report.to_text()) << "\n";
  return 0;
}

int workers_from(const std::string& s) { return s.empty() ? 0 : std::stoi(s); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-ring code constructions over F2 and R_k"};
  app.require_subcommand(1);

  CommonOpts construct_opts, gray_opts, dual_opts, enum_opts;
  std::string enum_kind = "hamming";

  auto* cmd_construct = app.add_subcommand("construct", "build C(v) from sigma(v) and report it");
  add_common(cmd_construct, construct_opts);

  auto* cmd_gray = app.add_subcommand("gray", "report the binary Gray image of C(v) (ring r<k>)");
  add_common(cmd_gray, gray_opts);

  auto* cmd_dual = app.add_subcommand("dual", "report the dual code of C(v)");
  add_common(cmd_dual, dual_opts);

  auto* cmd_enum = app.add_subcommand("enum", "print a weight enumerator of C(v)");
  add_common(cmd_enum, enum_opts);
  cmd_enum->add_option("--kind", enum_kind, "hamming | lee | complete");

  std::string search_name, spec_file, search_workers, out_file;
  int witnesses = 4;
  bool search_json = false;
  auto* cmd_search = app.add_subcommand("search", "run a named reproduction or a pattern-file search");
  cmd_search->add_option("--name", search_name, "built-in search name");
  cmd_search->add_option("--spec", spec_file, "JSON pattern file (SearchSpec fields)");
  cmd_search->add_option("--workers", search_workers, "worker threads (default GRC_WORKERS or all cores)");
  cmd_search->add_option("--witnesses", witnesses, "number of witness elements to keep");
  cmd_search->add_flag("--json", search_json, "emit the report as JSON");
  cmd_search->add_option("--out", out_file, "also write the JSON report to a file");

  bool verify_all = false, verify_matrices = false;
  std::string suite, verify_workers;
  std::uint64_t seed = 24601;
  int trials = 0;
  auto* cmd_verify = app.add_subcommand("verify", "displayed-matrix checks and property suites");
  cmd_verify->add_flag("--all", verify_all, "run every suite and all displayed matrices");
  cmd_verify->add_flag("--matrices", verify_matrices, "verify the displayed generator matrices");
  cmd_verify->add_option("--suite", suite, "one property suite");
  cmd_verify->add_option("--seed", seed, "RNG seed (default fixed for reproducibility)");
  cmd_verify->add_option("--trials", trials, "override the per-suite trial count");
  cmd_verify->add_option("--workers", verify_workers, "unused; accepted for symmetry");

  std::string list_what = "searches";
  auto* cmd_list = app.add_subcommand("list", "list built-in searches, suites or matrices");
  cmd_list->add_option("what", list_what, "searches | suites | matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_construct->parsed()) {
      const Built b = build_code(construct_opts);
      return emit_report(b.code, construct_opts, grc::to_string(b.v), b.shape);
    }

    if (cmd_gray->parsed()) {
      if (grc::parse_ring_spec(gray_opts.ring).is_f2())
        throw std::invalid_argument("gray requires a ring r<k> with k >= 1");
      const Built b = build_code(gray_opts);
      return emit_report(grc::gray_image(b.code), gray_opts, grc::to_string(b.v), b.shape);
    }

    if (cmd_dual->parsed()) {
      const Built b = build_code(dual_opts);
      return emit_report(grc::dual(b.code), dual_opts, grc::to_string(b.v), "");
    }

    if (cmd_enum->parsed()) {
      const Built b = build_code(enum_opts);
      grc::WeightKind kind;
      if (enum_kind == "hamming") kind = grc::WeightKind::hamming;
      else if (enum_kind == "lee") kind = grc::WeightKind::lee;
      else if (enum_kind == "complete") kind = grc::WeightKind::complete;
      else throw std::invalid_argument("unknown enumerator kind '" + enum_kind + "'");
      const grc::WeightEnumerator we = grc::weight_enumerator(b.code, kind);
      if (kind == grc::WeightKind::complete) {
        for (const auto& [comp, count] : we.by_composition) {
          std::cout << count << " x [";
          for (size_t i = 0; i < comp.size(); ++i)
            if (comp[i])
              std::cout << " " << grc::to_string(grc::RingValue(b.code.ring, static_cast<std::uint16_t>(i)))
                        << "^" << comp[i];
          std::cout << " ]\n";
        }
      } else {
        for (const auto& [w, count] : we.by_weight) std::cout << w << ": " << count << "\n";
      }
      return 0;
    }

    if (cmd_search->parsed()) {
      if (search_name.empty() == spec_file.empty())
        throw std::invalid_argument("search needs exactly one of --name or --spec");
      grc::SearchSpec spec;
      bool has_expected = false;
      grc::ExpectedCensus expected;
      if (!search_name.empty()) {
        spec = grc::builtin_search(search_name);
        expected = grc::expected_results(search_name);
        has_expected = true;
      } else {
        std::ifstream in(spec_file);
        if (!in) throw std::invalid_argument("cannot open spec file '" + spec_file + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        spec = grc::search_spec_from_json(ss.str());
      }
      spec.report_witnesses = witnesses;
      const grc::SearchReport report = grc::run_search(spec, workers_from(search_workers));
      const std::string json = grc::search_report_to_json(report);
      if (!out_file.empty()) std::ofstream(out_file) << json << "\n";
      if (search_json) {
        std::cout << json << "\n";
      } else {
        std::cout << "search " << (report.name.empty() ? "(custom)" : report.name) << ": "
                  << report.total_candidates << " candidates, " << report.workers << " workers, "
                  << static_cast<long long>(report.wall_ms) << " ms\n";
        for (const auto& s : report.stages) std::cout << "  " << s.name << ": " << s.count << "\n";
        for (const auto& [cls, hist] : report.distance_histograms) {
          std::cout << "  " << cls << " distances:";
          for (const auto& [d, c] : hist) std::cout << " " << d << ":" << c;
          std::cout << "\n";
        }
        std::cout << "  final: " << report.final_count << "\n";
        for (const auto& w : report.witnesses) std::cout << "  witness: " << w << "\n";
      }
      if (has_expected && !grc::report_matches_expected(report, expected)) {
        std::cerr << "MISMATCH: counts differ from the recorded reproduction values\n";
        return 1;
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      bool all_ok = true;
      if (verify_all || verify_matrices || suite.empty()) {
        for (const auto& name : grc::displayed_code_names()) {
          const auto check = grc::verify_displayed_matrix(name);
          std::cout << (check.ok ? "PASS" : "FAIL") << " matrix " << name << ": [" << check.length
                    << "," << check.rank << "," << check.distance << "]"
                    << (check.self_dual ? " self-dual" : "") << (check.type_ii ? " type II" : "")
                    << "\n";
          all_ok = all_ok && check.ok;
        }
      }
      std::vector<std::string> suites;
      if (verify_all) suites = grc::verify_suite_names();
      else if (!suite.empty()) suites = {suite};
      for (const auto& s : suites) {
        const auto r = grc::run_suite(s, seed, trials);
        std::cout << (r.ok() ? "PASS" : "FAIL") << " suite " << r.suite << ": " << r.trials
                  << " trials, " << r.failures << " failures\n";
        for (const auto& n : r.notes) std::cout << "    " << n << "\n";
        all_ok = all_ok && r.ok();
      }
      return all_ok ? 0 : 1;
    }

    if (cmd_list->parsed()) {
      if (list_what == "searches")
        for (const auto& n : grc::builtin_search_names()) std::cout << n << "\n";
      else if (list_what == "suites")
        for (const auto& n : grc::verify_suite_names()) std::cout << n << "\n";
      else if (list_what == "matrices")
        for (const auto& n : grc::displayed_code_names()) std::cout << n << "\n";
      else
        throw std::invalid_argument("unknown list target '" + list_what + "'");
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

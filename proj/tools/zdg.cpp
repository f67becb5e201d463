#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zdg/alliance.hpp"
#include "zdg/analysis.hpp"
#include "zdg/catalog.hpp"
#include "zdg/errors.hpp"
#include "zdg/graph.hpp"
#include "zdg/harness.hpp"
#include "zdg/ring.hpp"

namespace {

using namespace zdg;

// 0 ok, 1 failed verification or broken artifact, 2 bad request, 3 resource cap.
int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::MalformedDescriptor:
    case ErrorKind::NotUnital:
    case ErrorKind::EmptyGraph:
    case ErrorKind::EmptySubset:
    case ErrorKind::UnknownCheck:
    case ErrorKind::UnsupportedFormat:
      return 2;
    case ErrorKind::OrderCapExceeded:
    case ErrorKind::TooLarge:
    case ErrorKind::EnumerationTruncated:
      return 3;
    case ErrorKind::IntegrityConflict:
    case ErrorKind::IoFailure:
      return 1;
  }
  return 1;
}

std::string label_set(const ZeroDivisorGraph& g, const std::vector<int>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ", ";
    s += g.labels[vs[i]];
  }
  return s + "}";
}

std::string element_set(const FiniteRing& r, const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += r.labels[xs[i]];
  }
  return s + "}";
}

const char* yn(bool b) { return b ? "true" : "false"; }

int cmd_ring_info(const std::string& text) {
  FiniteRing r = build_ring(text);
  RingAnalysis an = analyze_ring(r);
  ZeroDivisorGraph g = build_zdg(r);
  long long edges = 0;
  for (int d : g.degree) edges += d;
  std::cout << "descriptor = " << r.descriptor_string << "\n"
            << "order = " << r.order << "\n"
            << "characteristic = " << an.characteristic << "\n"
            << "units = " << an.units.size() << "\n"
            << "zero_divisors = " << an.zero_divisors_star.size() << "\n"
            << "nilradical = " << an.nilradical.size() << "\n"
            << "field = " << yn(an.is_field) << "\n"
            << "local = " << yn(an.is_local) << "\n"
            << "reduced = " << yn(an.is_reduced) << "\n"
            << "colocal = " << yn(an.is_colocal) << "\n";
  if (an.maximal_ideal)
    std::cout << "maximal_ideal = " << element_set(r, *an.maximal_ideal) << "\n";
  if (an.colocal_core)
    std::cout << "least_ideal = " << element_set(r, *an.colocal_core) << "\n";
  std::cout << "graph_vertices = " << g.vertex_count << "\n"
            << "graph_edges = " << edges / 2 << "\n";
  return 0;
}

int cmd_graph_export(const std::string& text, const std::string& format,
                     const std::string& out_path) {
  FiniteRing r = build_ring(text);
  ZeroDivisorGraph g = build_zdg(r);
  std::string rendered = export_graph(g, format);
  if (out_path.empty()) {
    std::cout << rendered;
    return 0;
  }
  std::ofstream out(out_path, std::ios::trunc);
  out << rendered;
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + out_path);
  return 0;
}

int cmd_solve(const std::string& text, const std::string& kind_name,
              bool enumerate_all, int cap) {
  FiniteRing r = build_ring(text);
  ZeroDivisorGraph g = build_zdg(r);
  AllianceKind kind = kind_name == "defensive" ? AllianceKind::Defensive
                                               : AllianceKind::Offensive;
  const char* tag = kind == AllianceKind::Defensive ? "gamma_a" : "gamma_o";
  if (!enumerate_all) {
    AllianceResult res = solve_min_alliance(g, kind);
    std::cout << tag << " = " << res.number
              << ", witness = " << label_set(g, res.witness) << "\n";
    return 0;
  }
  AllianceResult res = enumerate_min_alliances(g, kind, cap);
  std::cout << tag << " = " << res.number
            << ", witness = " << label_set(g, res.witness) << "\n"
            << "minimum_alliances = " << res.all_minimum->size() << "\n";
  for (const auto& s : *res.all_minimum) std::cout << label_set(g, s) << "\n";
  if (res.enumeration_truncated) {
    std::cout << "truncated = true\n";
    std::cerr << "note: enumeration stopped at the cap of " << cap << "\n";
    return 3;
  }
  return 0;
}

int cmd_verify(bool all, const std::vector<std::string>& only, int max_order,
               const std::string& report_path, int jobs,
               const std::string& data_dir) {
  if (all == !only.empty()) {
    std::cerr << "error: choose exactly one of --all or --check\n";
    return 2;
  }
  HarnessOptions opts;
  opts.max_order = max_order;
  opts.report_path = report_path;
  opts.jobs = jobs;
  opts.data_dir = data_dir;
  HarnessResult res;
  if (all) {
    res = run_all(opts);
  } else {
    res = run_checks(catalog(opts.max_order), opts, only);
    if (!opts.report_path.empty()) write_report(res, opts.report_path);
  }

  std::cout << std::left << std::setw(15) << "check_id" << std::right
            << std::setw(6) << "pass" << std::setw(6) << "fail" << std::setw(6)
            << "skip" << std::setw(6) << "info" << std::setw(14)
            << "inconclusive" << std::setw(7) << "error"
            << "  result\n";
  for (const auto& o : res.outcomes) {
    int pass = 0, fail = 0, skip = 0, info = 0, inconclusive = 0, error = 0;
    for (const auto& i : o.instances) {
      if (i.verdict == "pass") ++pass;
      else if (i.verdict == "fail") ++fail;
      else if (i.verdict == "skip") ++skip;
      else if (i.verdict == "info") ++info;
      else if (i.verdict == "inconclusive") ++inconclusive;
      else ++error;
    }
    std::cout << std::left << std::setw(15) << o.check_id << std::right
              << std::setw(6) << pass << std::setw(6) << fail << std::setw(6)
              << skip << std::setw(6) << info << std::setw(14) << inconclusive
              << std::setw(7) << error << "  "
              << (o.passed ? "pass" : "fail") << "\n";
  }
  std::cout << "all_passed = " << yn(res.all_passed) << "\n"
            << "catalog_size = " << res.catalog_size << "\n"
            << "catalog_hash = " << res.catalog_hash << "\n";
  return res.all_passed ? 0 : 1;
}

int cmd_catalog(int max_order) {
  for (const auto& e : catalog(max_order))
    std::cout << std::left << std::setw(34) << e.name << std::right
              << std::setw(5) << e.order << "  " << e.provenance << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-divisor graphs of finite commutative rings: exact "
               "offensive and defensive alliance numbers"};
  app.require_subcommand(1);

  auto* info = app.add_subcommand("ring-info", "print structural ring facts");
  std::string info_desc;
  info->add_option("descriptor", info_desc, "e.g. Z12, GF(8), Z4[x]/(2x,x^2-2), Z2xZ9")
      ->required();

  auto* graph = app.add_subcommand("graph", "graph utilities");
  graph->require_subcommand(1);
  auto* exp = graph->add_subcommand("export", "render the zero-divisor graph");
  std::string exp_desc, exp_format = "dot", exp_out;
  exp->add_option("descriptor", exp_desc, "ring descriptor")->required();
  exp->add_option("--format", exp_format, "dot or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out", exp_out, "output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "exact minimum alliance size");
  std::string solve_desc, solve_kind = "offensive";
  bool solve_enum = false;
  int solve_cap = kDefaultEnumerationCap;
  solve->add_option("descriptor", solve_desc, "ring descriptor")->required();
  solve->add_option("--kind", solve_kind, "offensive or defensive")
      ->capture_default_str()
      ->check(CLI::IsMember({"offensive", "defensive"}));
  solve->add_flag("--enumerate-all", solve_enum, "list every minimum alliance");
  solve->add_option("--cap", solve_cap, "enumeration cap")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run registry checks over the catalog");
  bool verify_all = false;
  std::vector<std::string> verify_checks;
  int verify_max_order = 100;
  std::string verify_report, verify_data_dir;
  int verify_jobs = 1;
  verify->add_flag("--all", verify_all, "run every registered check");
  verify->add_option("--check", verify_checks, "check id, repeatable");
  verify->add_option("--max-order", verify_max_order, "catalog order bound")
      ->capture_default_str();
  verify->add_option("--report", verify_report,
                     "write a JSON report (+ CSV summary beside it)");
  verify->add_option("--jobs", verify_jobs, "worker threads")->capture_default_str();
  verify->add_option("--data-dir", verify_data_dir,
                     "cache directory (default: $ZDG_DATA_DIR or ./.zdg-data)");

  auto* cat = app.add_subcommand("catalog", "list the ring catalog");
  int cat_max_order = 100;
  cat->add_option("--max-order", cat_max_order, "order bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_ring_info(info_desc);
    if (graph->parsed()) return cmd_graph_export(exp_desc, exp_format, exp_out);
    if (solve->parsed())
      return cmd_solve(solve_desc, solve_kind, solve_enum, solve_cap);
    if (verify->parsed())
      return cmd_verify(verify_all, verify_checks, verify_max_order,
                        verify_report, verify_jobs, verify_data_dir);
    if (cat->parsed()) return cmd_catalog(cat_max_order);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

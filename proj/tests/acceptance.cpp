// Acceptance gate: thirteen criteria, one PASS/FAIL line each, nonzero exit
// when any criterion fails. argv[1] is the CLI binary used by criterion 13.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zdg/alliance.hpp"
#include "zdg/analysis.hpp"
#include "zdg/catalog.hpp"
#include "zdg/descriptor.hpp"
#include "zdg/fingerprint.hpp"
#include "zdg/graph.hpp"
#include "zdg/harness.hpp"
#include "zdg/ring.hpp"

using namespace zdg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string temp_dir() {
  char tmpl[] = "/tmp/zdg-acceptance-XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::cerr << "cannot create temp dir\n";
    std::exit(2);
  }
  return tmpl;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ZeroDivisorGraph& graph_of(const std::string& descriptor) {
  static std::map<std::string, ZeroDivisorGraph> memo;
  auto it = memo.find(descriptor);
  if (it == memo.end())
    it = memo.emplace(descriptor, build_zdg(build_ring(descriptor))).first;
  return it->second;
}

int gamma_of(const std::string& descriptor, AllianceKind kind) {
  static std::map<std::pair<std::string, int>, int> memo;
  auto key = std::make_pair(descriptor, static_cast<int>(kind));
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, solve_min_alliance(graph_of(descriptor), kind).number)
             .first;
  return it->second;
}

struct Criterion {
  bool ok = true;
  std::vector<std::string> details;

  void fail(const std::string& detail) {
    ok = false;
    details.push_back(detail);
  }
  void require(bool cond, const std::string& detail) {
    if (!cond) fail(detail);
  }
};

const CheckOutcome* find_outcome(const HarnessResult& r, const std::string& id) {
  for (const auto& o : r.outcomes)
    if (o.check_id == id) return &o;
  return nullptr;
}

void require_outcome(Criterion& c, const HarnessResult& r,
                     const std::string& id) {
  const CheckOutcome* o = find_outcome(r, id);
  if (!o) {
    c.fail(id + " missing from the harness result");
    return;
  }
  if (!o->passed) {
    std::string detail = id + " did not pass";
    for (const auto& cex : o->counterexamples)
      detail += "; " + cex.subject + ": " + cex.relation;
    c.fail(detail);
  }
}

// 1: exact solver equals brute force on every small catalog graph, both kinds.
Criterion criterion_oracle_equivalence(const std::vector<CatalogEntry>& entries) {
  Criterion c;
  auto start = Clock::now();
  int graphs = 0;
  for (const auto& e : entries) {
    const ZeroDivisorGraph& g = graph_of(e.descriptor);
    if (g.vertex_count == 0 || g.vertex_count > 20) continue;
    ++graphs;
    for (AllianceKind kind : {AllianceKind::Offensive, AllianceKind::Defensive}) {
      int fast = solve_min_alliance(g, kind).number;
      int slow = brute_force_min_alliance(g, kind).number;
      if (fast != slow)
        c.fail(e.name + ": solver " + std::to_string(fast) + " != brute " +
               std::to_string(slow));
    }
  }
  c.require(graphs >= 40, "only " + std::to_string(graphs) +
                              " graphs with at most 20 vertices");
  double secs = seconds_since(start);
  c.require(secs < 120.0, "took " + std::to_string(secs) + " s");
  return c;
}

// 2: every ring in the gamma=1 family measures 1; the reverse scan is clean.
Criterion criterion_gamma_one(const HarnessResult& full) {
  Criterion c;
  auto family = gamma_one_rings();
  c.require(family.size() == 14, "family size " + std::to_string(family.size()));
  for (const auto& d : family) {
    int g = gamma_of(d, AllianceKind::Offensive);
    if (g != 1) c.fail(d + " measures " + std::to_string(g));
  }
  require_outcome(c, full, "GAMMA1-FWD");
  require_outcome(c, full, "GAMMA1-REV");
  return c;
}

// 3: every ring in the gamma=2 family, taking the second factor over field
// orders two through nine, measures 2; the reverse scan is clean.
Criterion criterion_gamma_two(const HarnessResult& full) {
  Criterion c;
  std::vector<std::string> listed = gamma_two_rings();
  std::set<std::string> family(listed.begin(), listed.end());
  for (int k = 2; k <= 9; ++k) {
    if (prime_power_split(k).first == 0) continue;
    family.insert(canonical_string(
        parse_descriptor("Z3x" + field_descriptor(k))));
  }
  for (const auto& d : family) {
    int g = gamma_of(d, AllianceKind::Offensive);
    if (g != 2) c.fail(d + " measures " + std::to_string(g));
  }
  require_outcome(c, full, "GAMMA2-FWD");
  require_outcome(c, full, "GAMMA2-REV");
  return c;
}

// 4: product-of-fields grid equals min(q1, q2) - 1 on all 28 pairs.
Criterion criterion_field_grid() {
  Criterion c;
  auto start = Clock::now();
  int pairs = 0;
  for (std::size_t i = 0; i < std::size(kSmallFieldOrders); ++i) {
    for (std::size_t j = i; j < std::size(kSmallFieldOrders); ++j) {
      int q1 = kSmallFieldOrders[i], q2 = kSmallFieldOrders[j];
      std::string d = canonical_string(parse_descriptor(
          field_descriptor(q1) + "x" + field_descriptor(q2)));
      int g = gamma_of(d, AllianceKind::Offensive);
      ++pairs;
      if (g != std::min(q1, q2) - 1)
        c.fail(d + " measures " + std::to_string(g) + ", expected " +
               std::to_string(std::min(q1, q2) - 1));
    }
  }
  c.require(pairs == 28, "expected 28 pairs, saw " + std::to_string(pairs));
  double secs = seconds_since(start);
  c.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  return c;
}

// 5: offensive number plus two is at most the zero-divisor count on every
// non-field ring, with equality exactly on the rings fingerprinting as Z9.
Criterion criterion_offensive_bound(const std::vector<CatalogEntry>& entries) {
  Criterion c;
  Fingerprint z9 = fingerprint(build_ring("Z9"));
  std::vector<std::string> equality;
  for (const auto& e : entries) {
    FiniteRing r = build_ring(e.descriptor);
    RingAnalysis an = analyze_ring(r);
    if (an.is_field) continue;
    int z = static_cast<int>(an.zero_divisors_star.size()) + 1;
    int g = gamma_of(e.descriptor, AllianceKind::Offensive);
    if (g + 2 > z)
      c.fail(e.name + ": gamma + 2 = " + std::to_string(g + 2) + " > |Z| = " +
             std::to_string(z));
    else if (g + 2 == z)
      equality.push_back(e.name);
  }
  bool z9_seen = false;
  for (const auto& name : equality) {
    if (fingerprint(build_ring(name)) == z9)
      z9_seen = true;
    else
      c.fail("equality at " + name + ", which is not in the Z9 class");
  }
  c.require(z9_seen, "no equality instance in the Z9 class");
  return c;
}

// 6: the chain through the defensive quadratic holds on every non-field ring
// and both equalities land at Z9.
Criterion criterion_chained_bounds(const std::vector<CatalogEntry>& entries) {
  Criterion c;
  for (const auto& e : entries) {
    FiniteRing r = build_ring(e.descriptor);
    RingAnalysis an = analyze_ring(r);
    if (an.is_field) continue;
    int z = static_cast<int>(an.zero_divisors_star.size()) + 1;
    int go = gamma_of(e.descriptor, AllianceKind::Offensive);
    int ga = gamma_of(e.descriptor, AllianceKind::Defensive);
    if (go + 2 > z)
      c.fail(e.name + ": gamma_o + 2 = " + std::to_string(go + 2) +
             " > |Z| = " + std::to_string(z));
    if (z > ga * ga + ga + 1)
      c.fail(e.name + ": |Z| = " + std::to_string(z) + " > " +
             std::to_string(ga * ga + ga + 1));
  }
  int z9_go = gamma_of("Z9", AllianceKind::Offensive);
  int z9_ga = gamma_of("Z9", AllianceKind::Defensive);
  c.require(z9_ga == 1, "defensive number of Z9 is " + std::to_string(z9_ga));
  c.require(z9_go + 2 == 3, "left equality misses at Z9");
  c.require(z9_ga * z9_ga + z9_ga + 1 == 3, "right equality misses at Z9");
  return c;
}

// 7: local non-field rings obey the quadratic vertex-count bound; Z9 attains it.
Criterion criterion_local_bound(const std::vector<CatalogEntry>& entries) {
  Criterion c;
  bool equality_at_z9 = false;
  for (const auto& e : entries) {
    FiniteRing r = build_ring(e.descriptor);
    RingAnalysis an = analyze_ring(r);
    if (an.is_field || !an.is_local) continue;
    int zstar = static_cast<int>(an.zero_divisors_star.size());
    int g = gamma_of(e.descriptor, AllianceKind::Offensive);
    int rhs = (zstar - g) * (g - 1) + 1;
    if (g > rhs)
      c.fail(e.name + ": gamma = " + std::to_string(g) + " > " +
             std::to_string(rhs));
    if (e.descriptor == "Z9" && g == rhs) equality_at_z9 = true;
  }
  c.require(equality_at_z9, "no equality at Z9");
  return c;
}

// 8: doubled-ring suite: upper bound, forced membership of (1,0), lower
// bound, and the reduced upper bound.
Criterion criterion_doubled_suite(const HarnessResult& full) {
  Criterion c;
  require_outcome(c, full, "Z2R-UPPER");
  require_outcome(c, full, "Z2R-MEMBER");
  require_outcome(c, full, "Z2R-PROP");
  return c;
}

// 9: square-zero statistic bound, attained at Z8 with the hand-checked values.
Criterion criterion_nilpotent_bound(const HarnessResult& full) {
  Criterion c;
  require_outcome(c, full, "NILP-BOUND");
  int r8 = compute_r(build_ring("Z8"));
  c.require(r8 == 0, "r(Z8) = " + std::to_string(r8));
  int doubled = gamma_of("Z2xZ8", AllianceKind::Offensive);
  int brute = brute_force_min_alliance(graph_of("Z2xZ8"),
                                       AllianceKind::Offensive)
                  .number;
  c.require(doubled == 3, "gamma(Z2xZ8) = " + std::to_string(doubled));
  c.require(brute == 3, "brute gamma(Z2xZ8) = " + std::to_string(brute));
  int base = gamma_of("Z8", AllianceKind::Offensive);
  c.require(doubled == 1 + r8 + 2 * base, "bound not attained at Z8");
  return c;
}

// 10: completeness biconditional on the bounded universe, with the positive
// order-nine case and the excluded product pair both present.
Criterion criterion_complete_iff(const HarnessResult& full) {
  Criterion c;
  require_outcome(c, full, "COMPLETE-IFF");
  const CheckOutcome* o = find_outcome(full, "COMPLETE-IFF");
  if (!o) return c;
  bool z9 = false, z3z3 = false;
  for (const auto& i : o->instances) {
    if (!i.values.is_object()) continue;
    if (i.subject == "Z9" && i.verdict == "pass" &&
        i.values.value("complete", false))
      z9 = true;
    if (i.subject == "Z3xZ3" && i.verdict == "pass" &&
        !i.values.value("complete", true))
      z3z3 = true;
  }
  c.require(z9, "Z9 positive case missing");
  c.require(z3z3, "Z3xZ3 exclusion missing");
  return c;
}

// 11: the two closed-form grids, plus the two hand anchors by brute force.
Criterion criterion_product_formulas(const HarnessResult& full) {
  Criterion c;
  require_outcome(c, full, "FXR-FORMULA");
  require_outcome(c, full, "Z2KF-FORMULA");
  for (const char* d : {"Z3xZ4", "Z2xZ2xZ3"}) {
    int fast = gamma_of(d, AllianceKind::Offensive);
    int slow = brute_force_min_alliance(graph_of(d), AllianceKind::Offensive)
                   .number;
    if (fast != 3 || slow != 3)
      c.fail(std::string(d) + ": solver " + std::to_string(fast) +
             ", brute " + std::to_string(slow) + ", expected 3");
  }
  return c;
}

// 12: per-vertex degree identity, the local-ring profile, and the
// colocal-implies-local implication.
Criterion criterion_structure_facts(const HarnessResult& full) {
  Criterion c;
  require_outcome(c, full, "DEG-ANN");
  require_outcome(c, full, "FACTS-LOCAL");
  require_outcome(c, full, "COLOCAL-LOCAL");
  return c;
}

// 13: the CLI's full verification is reproducible byte for byte across two
// cold-cache runs, each under ten minutes with exit code 0.
Criterion criterion_reproducible_cli(const std::string& cli) {
  Criterion c;
  if (cli.empty()) {
    c.fail("no CLI path supplied");
    return c;
  }
  std::string reports[2];
  for (int run = 0; run < 2; ++run) {
    std::string dir = temp_dir();
    std::string report = dir + "/report.json";
    std::string cmd = "'" + cli + "' verify --all --max-order 100 --data-dir '" +
                      dir + "' --report '" + report + "' > '" + dir +
                      "/stdout.txt' 2>&1";
    auto start = Clock::now();
    int status = std::system(cmd.c_str());
    double secs = seconds_since(start);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (exit_code != 0) {
      c.fail("run " + std::to_string(run + 1) + " exited " +
             std::to_string(exit_code));
      continue;
    }
    c.require(secs < 600.0, "run " + std::to_string(run + 1) + " took " +
                                std::to_string(secs) + " s");
    reports[run] = read_file(report);
    c.require(!reports[run].empty(),
              "run " + std::to_string(run + 1) + " wrote no report");
  }
  c.require(c.ok && reports[0] == reports[1],
            "reports differ between the two runs");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  std::vector<CatalogEntry> entries = catalog(100);

  HarnessOptions opts;
  opts.max_order = 100;
  opts.data_dir = temp_dir();
  opts.jobs = 4;
  HarnessResult full = run_checks(entries, opts);

  struct Row {
    const char* label;
    Criterion result;
  };
  std::vector<Row> rows;
  rows.push_back({"solver matches brute force on every catalog graph with at "
                  "most 20 vertices",
                  criterion_oracle_equivalence(entries)});
  rows.push_back({"alliance number one: family measures 1, reverse scan clean",
                  criterion_gamma_one(full)});
  rows.push_back({"alliance number two: family measures 2, reverse scan clean",
                  criterion_gamma_two(full)});
  rows.push_back({"field product grid equals min(q1,q2)-1 on all 28 pairs",
                  criterion_field_grid()});
  rows.push_back({"offensive number plus two bounded by zero-divisor count, "
                  "equality only in the Z9 class",
                  criterion_offensive_bound(entries)});
  rows.push_back({"chain through the defensive quadratic, both equalities at Z9",
                  criterion_chained_bounds(entries)});
  rows.push_back({"local ring quadratic bound, equality at Z9",
                  criterion_local_bound(entries)});
  rows.push_back({"doubled ring suite: upper, membership, lower, reduced bounds",
                  criterion_doubled_suite(full)});
  rows.push_back({"square-zero statistic bound, attained at Z8",
                  criterion_nilpotent_bound(full)});
  rows.push_back({"completeness biconditional on the bounded universe",
                  criterion_complete_iff(full)});
  rows.push_back({"product formula grids and hand anchors",
                  criterion_product_formulas(full)});
  rows.push_back({"degree identity, local profile, colocal implication",
                  criterion_structure_facts(full)});
  rows.push_back({"CLI full verification reproducible byte for byte",
                  criterion_reproducible_cli(cli)});

  int failures = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    std::cout << (row.result.ok ? "PASS" : "FAIL") << " criterion " << i + 1
              << ": " << row.label << "\n";
    if (!row.result.ok) {
      ++failures;
      for (const auto& d : row.result.details)
        std::cout << "       " << d << "\n";
    }
  }
  std::cout << failures << " of 13 criteria failing\n";
  return failures == 0 ? 0 : 1;
}

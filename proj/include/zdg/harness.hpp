#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zdg/alliance.hpp"
#include "zdg/catalog.hpp"
#include "zdg/ring.hpp"

namespace zdg {

// One evaluated instance of a check: the ring(s) involved, the measured
// numbers, the concrete relation tested, and the verdict. Verdicts:
// pass, fail, skip (guard unmet), info (reported but not judged),
// inconclusive (resource cap), error (the instance could not be evaluated).
struct CheckInstance {
  std::string subject;
  nlohmann::ordered_json values;
  std::string relation;
  std::string verdict;
  std::string note;
};

struct CheckOutcome {
  std::string check_id;
  std::string description;
  bool passed = true;  // no fail and no error rows
  std::vector<CheckInstance> instances;        // sorted by subject
  std::vector<CheckInstance> counterexamples;  // the fail and error rows
  long long runtime_ms = 0;
};

struct HarnessOptions {
  int max_order = 100;
  std::string data_dir;     // empty: resolved by Cache
  std::string report_path;  // empty: no report written by run_all
  int jobs = 1;
  int enumeration_cap = kDefaultEnumerationCap;
};

struct HarnessResult {
  std::vector<CheckOutcome> outcomes;  // sorted by check_id
  bool all_passed = true;
  std::string catalog_hash;
  int catalog_size = 0;
  int max_order = 0;
  int enumeration_cap = kDefaultEnumerationCap;
};

// Minimum, over all minimum offensive alliances of the graph of `ring`, of
// the number of square-zero vertices left outside the alliance. Zero for
// reduced rings. Throws EnumerationTruncated when the alliance list does
// not fit under `cap`, and EmptyGraph for fields.
int compute_r(const FiniteRing& ring, int cap = kDefaultEnumerationCap);

// Registry ids, sorted.
const std::vector<std::string>& registry_check_ids();

// Evaluates checks over the given catalog entries. `only_ids` empty means
// every registered check; unknown ids raise UnknownCheck. Results do not
// depend on `jobs` or on cache state.
HarnessResult run_checks(const std::vector<CatalogEntry>& entries,
                         const HarnessOptions& options,
                         const std::vector<std::string>& only_ids = {});

// catalog(max_order) + run_checks, writing the report when a path is set.
HarnessResult run_all(const HarnessOptions& options);

// Deterministic report document; no wall-clock data.
nlohmann::ordered_json report_json(const HarnessResult& result);

// Writes the JSON report to `path` plus a CSV summary with per-check
// verdict counts and runtimes next to it (same stem, .csv extension).
void write_report(const HarnessResult& result, const std::string& path);

}  // namespace zdg

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace zdg {

// One cached computation, keyed by canonical descriptor and artifact
// version. Absent fields simply have not been computed yet.
struct CacheRecord {
  std::string descriptor;
  std::string fingerprint;
  std::optional<int> gamma_offensive;
  std::optional<int> gamma_defensive;
  std::optional<int> r_statistic;
  std::string computed_at;  // ISO 8601 UTC
  std::string artifact_version;
};

// Append-only NDJSON store under a data directory: one JSON object per line
// in cache.ndjson. Records for other artifact versions are ignored on read.
// A put that disagrees with a stored value for the same descriptor and
// version raises IntegrityConflict; agreeing records merge field-wise.
class Cache {
 public:
  // Empty dir means: $ZDG_DATA_DIR if set, else ./.zdg-data.
  explicit Cache(std::string dir = "");

  const std::string& dir() const { return dir_; }

  std::optional<CacheRecord> get(const std::string& descriptor);
  void put(const CacheRecord& record);

 private:
  void ensure_loaded();

  std::mutex mu_;
  std::string dir_;
  bool loaded_ = false;
  std::map<std::string, CacheRecord> records_;
};

// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace zdg

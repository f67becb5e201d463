#include "zdg/cache.hpp"

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "zdg/errors.hpp"
#include "zdg/version.hpp"

namespace zdg {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

ordered_json to_json(const CacheRecord& r) {
  ordered_json j;
  j["descriptor"] = r.descriptor;
  j["fingerprint"] = r.fingerprint;
  if (r.gamma_offensive) j["gamma_offensive"] = *r.gamma_offensive;
  if (r.gamma_defensive) j["gamma_defensive"] = *r.gamma_defensive;
  if (r.r_statistic) j["r_statistic"] = *r.r_statistic;
  j["computed_at"] = r.computed_at;
  j["artifact_version"] = r.artifact_version;
  return j;
}

std::optional<CacheRecord> from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("descriptor") ||
      !j.contains("artifact_version"))
    return std::nullopt;
  CacheRecord r;
  r.descriptor = j["descriptor"].get<std::string>();
  r.fingerprint = j.value("fingerprint", std::string());
  if (j.contains("gamma_offensive")) r.gamma_offensive = j["gamma_offensive"].get<int>();
  if (j.contains("gamma_defensive")) r.gamma_defensive = j["gamma_defensive"].get<int>();
  if (j.contains("r_statistic")) r.r_statistic = j["r_statistic"].get<int>();
  r.computed_at = j.value("computed_at", std::string());
  r.artifact_version = j["artifact_version"].get<std::string>();
  return r;
}

// Field-wise merge; throws on any disagreement between present fields.
void merge_into(CacheRecord& base, const CacheRecord& add) {
  auto clash = [&](bool bad) {
    if (bad)
      throw Error(ErrorKind::IntegrityConflict,
                  "cache: conflicting values for " + add.descriptor +
                      " at version " + add.artifact_version);
  };
  clash(!base.fingerprint.empty() && !add.fingerprint.empty() &&
        base.fingerprint != add.fingerprint);
  clash(base.gamma_offensive && add.gamma_offensive &&
        *base.gamma_offensive != *add.gamma_offensive);
  clash(base.gamma_defensive && add.gamma_defensive &&
        *base.gamma_defensive != *add.gamma_defensive);
  clash(base.r_statistic && add.r_statistic &&
        *base.r_statistic != *add.r_statistic);
  if (!add.fingerprint.empty()) base.fingerprint = add.fingerprint;
  if (add.gamma_offensive) base.gamma_offensive = add.gamma_offensive;
  if (add.gamma_defensive) base.gamma_defensive = add.gamma_defensive;
  if (add.r_statistic) base.r_statistic = add.r_statistic;
  if (!add.computed_at.empty()) base.computed_at = add.computed_at;
}

}  // namespace

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    const char* env = std::getenv("ZDG_DATA_DIR");
    dir_ = env && *env ? env : ".zdg-data";
  }
}

void Cache::ensure_loaded() {
  if (loaded_) return;
  loaded_ = true;
  std::ifstream in(fs::path(dir_) / "cache.ndjson");
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    auto rec = from_json(j);
    if (!rec || rec->artifact_version != kArtifactVersion) continue;
    auto [it, fresh] = records_.try_emplace(rec->descriptor, *rec);
    if (!fresh) merge_into(it->second, *rec);  // tampered files may throw here
  }
}

std::optional<CacheRecord> Cache::get(const std::string& descriptor) {
  std::lock_guard lock(mu_);
  ensure_loaded();
  auto it = records_.find(descriptor);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void Cache::put(const CacheRecord& record) {
  std::lock_guard lock(mu_);
  ensure_loaded();
  CacheRecord rec = record;
  rec.artifact_version = kArtifactVersion;
  if (rec.computed_at.empty()) rec.computed_at = utc_timestamp();

  auto [it, fresh] = records_.try_emplace(rec.descriptor, rec);
  if (!fresh) merge_into(it->second, rec);

  std::error_code ec;
  fs::create_directories(dir_, ec);
  std::ofstream out(fs::path(dir_) / "cache.ndjson", std::ios::app);
  out << to_json(rec).dump() << "\n";
  out.flush();
  if (!out)
    throw Error(ErrorKind::IoFailure, "cache: cannot append to " + dir_);
}

}  // namespace zdg

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "zdg/cache.hpp"
#include "zdg/catalog.hpp"
#include "zdg/descriptor.hpp"
#include "zdg/errors.hpp"
#include "zdg/version.hpp"

using namespace zdg;

namespace {

std::string temp_dir() {
  char tmpl[] = "/tmp/zdg-cache-test-XXXXXX";
  REQUIRE(mkdtemp(tmpl) != nullptr);
  return tmpl;
}

bool has_entry(const std::vector<CatalogEntry>& entries,
               const std::string& name) {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const CatalogEntry& e) { return e.name == name; });
}

}  // namespace

TEST_CASE("catalog contains the study rings") {
  auto entries = catalog(100);
  for (const char* name : {"Z4", "Z9", "Z16", "Z2xZ8", "Z3xZ9", "Z2xZ3xZ5",
                           "Z4[x]/(2x,x^2+2)", "Z2[x]/(x^3)", "GF(8)",
                           "Z2[x,y]/(x^2,xy,y^2)"})
    CHECK_MESSAGE(has_entry(entries, name), name);
}

TEST_CASE("catalog respects the order bound") {
  auto small = catalog(4);
  CHECK(has_entry(small, "Z4"));
  CHECK_FALSE(has_entry(small, "Z9"));
  for (const auto& e : small) CHECK(e.order <= 4);
  for (const auto& e : catalog(50)) CHECK(e.order <= 50);
}

TEST_CASE("catalog is deterministic with unique canonical names") {
  auto a = catalog(100);
  auto b = catalog(100);
  REQUIRE(a.size() == b.size());
  std::set<std::string> names;
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].descriptor == b[i].descriptor);
    CHECK(a[i].order == b[i].order);
    CHECK(a[i].name == a[i].descriptor);
    CHECK(canonical_string(parse_descriptor(a[i].descriptor)) ==
          a[i].descriptor);
    CHECK(names.insert(a[i].name).second);
    CHECK((a[i].provenance == "named" || a[i].provenance == "generated"));
  }
}

TEST_CASE("named entries back the classification lists") {
  auto entries = catalog(100);
  auto provenance_of = [&](const std::string& name) {
    for (const auto& e : entries)
      if (e.name == name) return e.provenance;
    return std::string("missing");
  };
  CHECK(provenance_of("Z6") == "generated");
  CHECK(provenance_of("Z2xZ3") == "named");
  CHECK(provenance_of("Z4[x]/(2x,x^2+2)") == "named");
  for (const auto& d : gamma_one_rings()) CHECK(has_entry(entries, d));
  for (const auto& d : gamma_two_rings()) CHECK(has_entry(entries, d));
}

TEST_CASE("classification lists have the expected sizes") {
  auto ones = gamma_one_rings();
  auto twos = gamma_two_rings();
  CHECK(ones.size() == 14);
  CHECK(twos.size() == 23);
  std::set<std::string> distinct(ones.begin(), ones.end());
  distinct.insert(twos.begin(), twos.end());
  CHECK(distinct.size() == 37);  // the two lists do not overlap
  for (const auto& d : ones)
    CHECK(canonical_string(parse_descriptor(d)) == d);
  for (const auto& d : twos)
    CHECK(canonical_string(parse_descriptor(d)) == d);
}

TEST_CASE("small field orders drive both families") {
  CHECK(field_descriptor(2) == "Z2");
  CHECK(field_descriptor(7) == "Z7");
  CHECK(field_descriptor(4) == "GF(4)");
  CHECK(field_descriptor(9) == "GF(9)");
  auto ones = gamma_one_rings();
  for (int q : kSmallFieldOrders) {
    std::string member =
        canonical_string(parse_descriptor("Z2x" + field_descriptor(q)));
    CHECK(std::count(ones.begin(), ones.end(), member) == 1);
  }
}

TEST_CASE("tiny order bounds are rejected") {
  CHECK_THROWS_AS(catalog(3), std::invalid_argument);
  CHECK_NOTHROW(catalog(4));
}

TEST_CASE("cache round-trips records") {
  Cache cache(temp_dir());
  CHECK_FALSE(cache.get("Z9").has_value());

  CacheRecord rec;
  rec.descriptor = "Z9";
  rec.fingerprint = "fp-z9";
  rec.gamma_offensive = 1;
  cache.put(rec);

  auto got = cache.get("Z9");
  REQUIRE(got.has_value());
  CHECK(got->gamma_offensive == 1);
  CHECK_FALSE(got->gamma_defensive.has_value());
  CHECK(got->fingerprint == "fp-z9");
  CHECK(got->artifact_version == kArtifactVersion);
  CHECK_FALSE(got->computed_at.empty());  // stamped on put
}

TEST_CASE("cache persists across instances and merges field-wise") {
  std::string dir = temp_dir();
  {
    Cache cache(dir);
    CacheRecord rec;
    rec.descriptor = "Z12";
    rec.gamma_offensive = 3;
    cache.put(rec);
    CacheRecord more;
    more.descriptor = "Z12";
    more.gamma_defensive = 2;
    more.r_statistic = 1;
    cache.put(more);
  }
  Cache fresh(dir);
  auto got = fresh.get("Z12");
  REQUIRE(got.has_value());
  CHECK(got->gamma_offensive == 3);
  CHECK(got->gamma_defensive == 2);
  CHECK(got->r_statistic == 1);

  std::ifstream in(std::filesystem::path(dir) / "cache.ndjson");
  int lines = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 2);  // append-only, one line per put
}

TEST_CASE("conflicting puts raise an integrity error") {
  Cache cache(temp_dir());
  CacheRecord rec;
  rec.descriptor = "Z16";
  rec.gamma_offensive = 2;
  cache.put(rec);

  CacheRecord wrong = rec;
  wrong.gamma_offensive = 5;
  try {
    cache.put(wrong);
    FAIL("conflict accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IntegrityConflict);
  }
  // The original value survives.
  CHECK(cache.get("Z16")->gamma_offensive == 2);
}

TEST_CASE("unreadable lines and foreign versions are ignored") {
  std::string dir = temp_dir();
  {
    Cache cache(dir);
    CacheRecord rec;
    rec.descriptor = "Z8";
    rec.gamma_offensive = 1;
    cache.put(rec);
  }
  {
    std::ofstream out(std::filesystem::path(dir) / "cache.ndjson",
                      std::ios::app);
    out << "not json at all\n";
    out << "{\"descriptor\":\"Z8\",\"gamma_offensive\":9,"
           "\"artifact_version\":\"0.0.0-other\"}\n";
  }
  Cache fresh(dir);
  auto got = fresh.get("Z8");
  REQUIRE(got.has_value());
  CHECK(got->gamma_offensive == 1);
}

TEST_CASE("empty dir resolves through the environment") {
  std::string dir = temp_dir();
  setenv("ZDG_DATA_DIR", dir.c_str(), 1);
  Cache cache{std::string()};
  CHECK(cache.dir() == dir);
  unsetenv("ZDG_DATA_DIR");
  Cache fallback{std::string()};
  CHECK(fallback.dir() == ".zdg-data");
}
